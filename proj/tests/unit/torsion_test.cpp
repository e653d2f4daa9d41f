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
#include "theta/quartic.hpp"
#include "theta/torsion.hpp"

using namespace theta;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Q3 = FieldDesc::real_quadratic(3);

bool is_square_in(const Integer& a, const FieldDesc& K) { return sqrt_in_field(QuadElem(Rational(a)), K).has_value(); }

}  // namespace

TEST_SUITE("torsion") {

TEST_CASE("three_torsion_in_K examples") {
  CHECK_FALSE(three_torsion_in_K(build_curve(CurveParams(6, ThetaSlope::pi_over_2())), Q).has_value());
  CHECK_FALSE(three_torsion_in_K(build_curve(CurveParams(5, ThetaSlope::pi_over_3())), Q).has_value());
  CHECK_FALSE(three_torsion_in_K(build_curve(CurveParams(3, ThetaSlope::pi_over_3())), FieldDesc::real_quadratic(2)).has_value());
}

TEST_CASE("rational 3-torsion at cos(theta) = 11/16") {
  const CurveParams params(1, ThetaSlope(16, 11));
  const Curve E = build_curve(params);
  const auto probe = probe_three_torsion(E, Q);
  REQUIRE(probe.point.has_value());
  CHECK(*probe.point == Point(QuadElem(9), QuadElem(36)));
  CHECK(torsion_order(*probe.point, E, Q) == 3);
  const TorsionReport rep = torsion_subgroup(params, Q);
  CHECK(rep.group == TorsionGroup::Z2xZ6);
  CHECK(rep.complete);
  const auto five = probe_three_torsion(build_curve(CurveParams(5, ThetaSlope(16, 11))), FieldDesc::real_quadratic(5));
  REQUIRE(five.point.has_value());
  CHECK(five.point->x() == QuadElem(45));
}

TEST_CASE("psi3 roots with square values give order-3 points") {
  std::mt19937_64 rng(29);
  int found = 0;
  for (int i = 0; i < 400 || found == 0; ++i) {
    const long A = static_cast<long>(rng() % 61) - 30;
    const long B = static_cast<long>(rng() % 121) - 60;
    if (B == 0 || A * A == 4 * B) continue;
    const Curve E{QuadElem(A), QuadElem(B)};
    for (const Rational& x0 : rational_roots(psi3(E))) {
      const auto y = is_square_rational(E.rhs(QuadElem(x0)).a());
      if (!y) continue;
      const Point P{QuadElem(x0), QuadElem(*y)};
      CHECK(torsion_order(P, E, Q) == 3);
      ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("root-only and full 3-torsion criteria can disagree") {
  bool seen = false;
  for (long A = -20; A <= 20 && !seen; ++A) {
    for (long B = -40; B <= 40 && !seen; ++B) {
      if (B == 0 || A * A == 4 * B) continue;
      const auto probe = probe_three_torsion(Curve(QuadElem(A), QuadElem(B)), Q);
      if (probe.root_only_disagrees) {
        seen = true;
        CHECK_FALSE(probe.psi3_roots.empty());
      }
    }
  }
  CHECK(seen);
}

TEST_CASE("four_torsion_in_K examples") {
  const auto P = four_torsion_in_K(CurveParams(1, ThetaSlope::two_pi_over_3()), Q3);
  REQUIRE(P.has_value());
  CHECK(*P == Point(QuadElem(3, 2, Q3), QuadElem(6, 4, Q3)));
  const Curve E = build_curve(CurveParams(1, ThetaSlope::two_pi_over_3()));
  CHECK(scalar_mul(2L, *P, E) == Point(QuadElem(3), QuadElem(0)));
  CHECK(scalar_mul(4L, *P, E).is_infinity());
  CHECK_FALSE(four_torsion_in_K(CurveParams(1, ThetaSlope::two_pi_over_3()), Q).has_value());
  CHECK_FALSE(four_torsion_in_K(CurveParams(5, ThetaSlope::pi_over_2()), Q).has_value());
}

TEST_CASE("4-torsion: square criterion is necessary, the halving criterion is exact") {
  int criterion_only = 0;
  for (long r = 1; r <= 10; ++r) {
    for (long s = -(r - 1); s <= r - 1; ++s) {
      if (std::gcd(r, s) != 1) continue;
      for (long d : {2, 3, 5, 7, 13}) {
        const FieldDesc K = FieldDesc::real_quadratic(d);
        const CurveParams params(1, ThetaSlope(r, s));
        const auto probe = probe_four_torsion(params, K);
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(d);
        CHECK(probe.square_criterion == is_square_in(Integer(2 * r * (r - s)), K));
        const bool halvable = is_square_in(params.root_pos(), K) && is_square_in(2 * r * params.n(), K);
        CHECK(probe.point.has_value() == halvable);
        if (probe.point) {
          CHECK(probe.square_criterion);
          CHECK(torsion_order(*probe.point, build_curve(params), K) == 4);
        }
        if (probe.square_criterion && !probe.point) ++criterion_only;
      }
    }
  }
  CHECK(criterion_only == 15);
}

TEST_CASE("4-torsion criterion without a point: r = 3, s = 1 over Q(sqrt(3))") {
  const auto probe = probe_four_torsion(CurveParams(1, ThetaSlope(3, 1)), Q3);
  CHECK(probe.square_criterion);
  CHECK_FALSE(probe.point.has_value());
  // Halving (2, 0) would need x^3 + 2x^2 - 8x = 96 + 48 sqrt(3) to be a square.
  CHECK_FALSE(sqrt_in_field(QuadElem(96, 48, Q3), Q3).has_value());
}

TEST_CASE("torsion over Q is Z2xZ2 for the non-exceptional grid") {
  for (long n : {5, 7, 10, 11, 13, 14, 15}) {
    for (const ThetaSlope& t : {ThetaSlope::pi_over_3(), ThetaSlope::pi_over_2(), ThetaSlope::two_pi_over_3()}) {
      const TorsionReport rep = torsion_subgroup(CurveParams(n, t), Q);
      CHECK(rep.group == TorsionGroup::Z2xZ2);
      CHECK(rep.complete);
      CHECK(rep.witnesses.empty());
    }
  }
}

TEST_CASE("torsion_subgroup over quadratic fields") {
  const TorsionReport rep = torsion_subgroup(CurveParams(1, ThetaSlope::two_pi_over_3()), Q3);
  CHECK(rep.group == TorsionGroup::Z2xZ4);
  CHECK(rep.complete);
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses.front() == Point(QuadElem(3, 2, Q3), QuadElem(6, 4, Q3)));
  const TorsionReport silent = torsion_subgroup(CurveParams(7, ThetaSlope::two_pi_over_3()), FieldDesc::real_quadratic(2));
  CHECK(silent.group == TorsionGroup::Z2xZ2);
  CHECK_FALSE(silent.complete);
  const TorsionReport rational = torsion_subgroup(CurveParams(7, ThetaSlope::two_pi_over_3()), Q);
  CHECK(rational.group == TorsionGroup::Z2xZ2);
  CHECK(rational.complete);
}

TEST_CASE("torsion witnesses have order 3, 4 or 8") {
  for (long d : {2, 3, 5, 6, 7}) {
    const TorsionReport rep = torsion_subgroup(CurveParams(1, ThetaSlope::two_pi_over_3()), FieldDesc::real_quadratic(d));
    for (const Point& w : rep.witnesses) {
      const auto order = torsion_order(w, build_curve(CurveParams(1, ThetaSlope::two_pi_over_3())), FieldDesc::real_quadratic(d));
      REQUIRE(order.has_value());
      CHECK((*order == 3 || *order == 4 || *order == 8));
    }
  }
}

TEST_CASE("halve_point") {
  const CurveParams params(1, ThetaSlope::two_pi_over_3());
  const auto halves = halve_point(Point(QuadElem(3), QuadElem(0)), params, Q3);
  CHECK(halves.size() == 4);
  const Curve E = build_curve(params);
  for (const Point& h : halves) CHECK(scalar_mul(2L, h, E) == Point(QuadElem(3), QuadElem(0)));
  CHECK(halve_point(Point(QuadElem(3), QuadElem(0)), params, Q).empty());
  CHECK_THROWS(halve_point(Point::infinity(), params, Q3));
}

}  // TEST_SUITE
