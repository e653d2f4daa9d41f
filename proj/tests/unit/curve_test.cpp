// Copyright 2026 The theta-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "theta/curve.hpp"
#include "theta/search.hpp"

using namespace theta;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Q3 = FieldDesc::real_quadratic(3);
const FieldDesc Q5 = FieldDesc::real_quadratic(5);
const FieldDesc Q7 = FieldDesc::real_quadratic(7);

Curve curve(long n, const ThetaSlope& t) { return build_curve(CurveParams(n, t)); }

Point pt(const Rational& x, const Rational& y) { return Point(QuadElem(x), QuadElem(y)); }

// Small rational points from a bounded search, as group-law samples.
std::vector<Point> sample_points(const Curve& E) {
  SearchConfig cfg;
  cfg.denom_bound = 3;
  cfg.numer_bound = 400;
  std::vector<Point> out;
  for (const Point& p : search_points(E, cfg)) {
    out.push_back(p);
    out.push_back(-p);
  }
  return out;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("build_curve") {
  CHECK(curve(1, ThetaSlope::two_pi_over_3()).to_string() == "y^2 = x^3 - 2*x^2 - 3*x");
  CHECK(curve(2, ThetaSlope::two_pi_over_3()).to_string() == "y^2 = x^3 - 4*x^2 - 12*x");
  CHECK(curve(6, ThetaSlope::pi_over_2()).to_string() == "y^2 = x^3 - 36*x");
  CHECK(curve(1, ThetaSlope::two_pi_over_3()).rhs_poly() == PolyQ({0, -3, -2, 1}));
}

TEST_CASE("expanded form matches the product form") {
  for (long n : {1, 5, 7, 30}) {
    for (long r = 1; r <= 6; ++r) {
      for (long s = -(r - 1); s <= r - 1; ++s) {
        if (std::gcd(r, s) != 1) continue;
        const CurveParams p(n, ThetaSlope(r, s));
        const PolyQ product = PolyQ({0, 1}) * PolyQ::linear_root(Rational(p.root_neg())) * PolyQ::linear_root(Rational(p.root_pos()));
        CHECK(build_curve(p).rhs_poly() == product);
      }
    }
  }
}

TEST_CASE("singular curves are rejected") {
  CHECK_THROWS(Curve(QuadElem(1), QuadElem(0)));
  CHECK_THROWS(Curve(QuadElem(2), QuadElem(1)));
}

TEST_CASE("ell_add examples") {
  const Curve E = curve(6, ThetaSlope::pi_over_3());
  const Point P(QuadElem(-3), QuadElem(0, 9, Q5));
  CHECK(ell_add(P, Point::infinity(), E) == P);
  CHECK(ell_add(Point::infinity(), P, E) == P);
  CHECK(ell_add(pt(0, 0), pt(0, 0), E).is_infinity());
  CHECK(ell_add(P, -P, E).is_infinity());
  // 2P = (169/20, 2093 sqrt(5)/200), derived from the tangent law and from phi.
  CHECK(ell_add(P, P, E) == Point(QuadElem(Rational(169, 20)), QuadElem(0, Rational(2093, 200), Q5)));
  CHECK_THROWS_AS(ell_add(pt(1, 1), P, E), OffCurve);
}

TEST_CASE("scalar_mul") {
  const Curve E = curve(1, ThetaSlope::two_pi_over_3());
  const Point P(QuadElem(3, 2, Q3), QuadElem(6, 4, Q3));
  REQUIRE(E.contains(P));
  CHECK(scalar_mul(0L, P, E).is_infinity());
  CHECK(scalar_mul(1L, P, E) == P);
  CHECK(scalar_mul(2L, P, E) == pt(3, 0));
  CHECK(scalar_mul(4L, P, E).is_infinity());
  CHECK(scalar_mul(-1L, P, E) == -P);
  CHECK(scalar_mul(Integer(3), P, E) == -P);
  CHECK_THROWS_AS(scalar_mul(2L, pt(1, 1), E), OffCurve);
}

TEST_CASE("group law axioms on search samples") {
  std::mt19937_64 rng(17);
  for (const Curve& E : {curve(5, ThetaSlope::pi_over_2()), curve(6, ThetaSlope::pi_over_3()), curve(14, ThetaSlope::two_pi_over_3())}) {
    const auto pts = sample_points(E);
    REQUIRE(pts.size() >= 4);
    auto pick = [&] { return pts[rng() % pts.size()]; };
    for (int i = 0; i < 100; ++i) {
      const Point a = pick(), b = pick(), c = pick();
      CHECK(ell_add(a, b, E) == ell_add(b, a, E));
      CHECK(ell_add(ell_add(a, b, E), c, E) == ell_add(a, ell_add(b, c, E), E));
      CHECK(ell_add(a, -a, E).is_infinity());
      CHECK(E.contains(ell_add(a, b, E)));
    }
  }
}

TEST_CASE("psi3") {
  CHECK(psi3(curve(6, ThetaSlope::pi_over_2())) == PolyQ({-1296, 0, -216, 0, 3}));
  CHECK(psi3(curve(3, ThetaSlope::pi_over_3())) == PolyQ({-729, 0, -162, 24, 3}));
}

TEST_CASE("quadratic twists") {
  const Curve E6 = curve(6, ThetaSlope::pi_over_3());
  CHECK(quadratic_twist(E6, 5).to_string() == "y^2 = x^3 + 60*x^2 - 2700*x");
  CHECK(quadratic_twist(curve(2, ThetaSlope::two_pi_over_3()), 7).to_string() == "y^2 = x^3 - 28*x^2 - 588*x");
  const Curve twice = quadratic_twist(quadratic_twist(E6, 5), 5);
  CHECK(twice.A() == QuadElem(12 * 25));
  CHECK(twice.B() == QuadElem(-108 * 625));
  CHECK(untwist(quadratic_twist(E6, 5), 5) == E6);
  CHECK_THROWS(quadratic_twist(E6, 4));
  CHECK_THROWS(quadratic_twist(E6, 1));
  CHECK_THROWS(quadratic_twist(E6, 0));
}

TEST_CASE("transport_twist_point") {
  const Curve E30 = curve(30, ThetaSlope::pi_over_3());
  CHECK(transport_twist_point(pt(-15, 225), E30, 5) == Point(QuadElem(-3), QuadElem(0, 9, Q5)));
  const Curve E14 = curve(14, ThetaSlope::two_pi_over_3());
  CHECK(transport_twist_point(pt(-12, 36), E14, 7) == Point(QuadElem(Rational(-12, 7)), QuadElem(0, Rational(36, 49), Q7)));
  const Curve E6 = curve(6, ThetaSlope::pi_over_2());
  const Point image = transport_twist_point(pt(-3, 9), E6, 6);
  CHECK(image == Point(QuadElem(Rational(-1, 2)), QuadElem(0, Rational(1, 4), FieldDesc::real_quadratic(6))));
  CHECK(curve(1, ThetaSlope::pi_over_2()).contains(image));
  CHECK_THROWS_AS(transport_twist_point(pt(1, 1), E30, 5), OffCurve);
}

TEST_CASE("transport of searched twist points stays on the curve") {
  const Curve E = curve(2, ThetaSlope::two_pi_over_3());
  const Curve twisted = quadratic_twist(E, 7);
  SearchConfig cfg;
  cfg.denom_bound = 4;
  cfg.numer_bound = 2000;
  for (const Point& p : search_points(twisted, cfg)) CHECK(E.contains(transport_twist_point(p, twisted, 7)));
}

TEST_CASE("torsion orders and non-torsion certificates") {
  CHECK(torsion_order_bound(Q) == 12);
  CHECK(torsion_order_bound(Q5) == 18);
  const Curve E14 = curve(14, ThetaSlope::two_pi_over_3());
  CHECK(certify_non_torsion(pt(-12, 36), E14, Q));
  CHECK(certify_non_torsion(pt(-7, 49), E14, Q));
  CHECK_FALSE(certify_non_torsion(pt(0, 0), E14, Q));
  CHECK(torsion_order(pt(0, 0), E14, Q) == 2);
  CHECK_FALSE(torsion_order(pt(-12, 36), E14, Q).has_value());
  const Curve E1 = curve(1, ThetaSlope::two_pi_over_3());
  const Point P(QuadElem(3, 2, Q3), QuadElem(6, 4, Q3));
  CHECK_FALSE(certify_non_torsion(P, E1, Q3));
  CHECK(torsion_order(P, E1, Q3) == 4);
  CHECK_THROWS_AS(certify_non_torsion(pt(1, 1), E14, Q), OffCurve);
}

}  // TEST_SUITE
