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

#include "doctest.h"
#include "theta/triangle.hpp"

using namespace theta;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Q3 = FieldDesc::real_quadratic(3);
const FieldDesc Q5 = FieldDesc::real_quadratic(5);
const FieldDesc Q7 = FieldDesc::real_quadratic(7);
const FieldDesc Q13 = FieldDesc::real_quadratic(13);

QuadElem root(const Rational& b, const FieldDesc& K) { return QuadElem(0, b, K); }

}  // namespace

TEST_SUITE("triangle") {

TEST_CASE("verify_triangle examples") {
  const CurveParams p2(2, ThetaSlope::two_pi_over_3());
  CHECK(verify_triangle(TriangleK(root(Rational(3, 7), Q7), root(Rational(8, 3), Q7), root(Rational(61, 21), Q7), p2, Q7)));
  const CurveParams p3(3, ThetaSlope::pi_over_3());
  CHECK(verify_triangle(TriangleK(root(Rational(1, 2), Q13), root(Rational(24, 13), Q13), root(Rational(43, 26), Q13), p3, Q13)));
  const CurveParams p6(6, ThetaSlope::pi_over_3());
  const auto bad = verify_triangle(TriangleK(root(1, Q5), root(Rational(12, 5), Q5), root(Rational(13, 5), Q5), p6, Q5));
  CHECK_FALSE(bad);
  CHECK(bad.defect == TriangleDefect::LawOfCosines);
  CHECK(verify_triangle(TriangleK(root(3, Q5), root(Rational(8, 5), Q5), root(Rational(13, 5), Q5), p6, Q5)));
}

TEST_CASE("verify_triangle defects") {
  const CurveParams p6(6, ThetaSlope::pi_over_2());
  CHECK(verify_triangle(TriangleK(4, 3, 5, p6, Q)));
  CHECK(verify_triangle(TriangleK(4, 3, -5, p6, Q)).defect == TriangleDefect::NonPositiveSide);
  CHECK(verify_triangle(TriangleK(8, 6, 10, p6, Q)).defect == TriangleDefect::Area);
  CHECK(verify_triangle(TriangleK(4, 3, 6, p6, Q)).defect == TriangleDefect::LawOfCosines);
  CHECK(verify_triangle(TriangleK(root(1, Q5), 3, 5, p6, Q)).defect == TriangleDefect::WrongField);
}

TEST_CASE("legs are normalized") {
  const CurveParams p6(6, ThetaSlope::pi_over_2());
  const TriangleK t(3, 4, 5, p6, Q);
  CHECK(t.u == QuadElem(4));
  CHECK(t.v == QuadElem(3));
  CHECK(t.same_sides(TriangleK(4, 3, 5, p6, Q)));
}

TEST_CASE("phi examples") {
  CHECK(phi_triangle_to_point(TriangleK(4, 3, 5, CurveParams(6, ThetaSlope::pi_over_2()), Q)) ==
        Point(QuadElem(Rational(25, 4)), QuadElem(Rational(35, 8))));
  const CurveParams p6(6, ThetaSlope::pi_over_3());
  CHECK(phi_triangle_to_point(TriangleK(root(3, Q5), root(Rational(8, 5), Q5), root(Rational(13, 5), Q5), p6, Q5)) ==
        Point(QuadElem(Rational(169, 20)), root(Rational(2093, 200), Q5)));
  const CurveParams p1(1, ThetaSlope::two_pi_over_3());
  CHECK(phi_triangle_to_point(TriangleK(2, 2, root(2, Q3), p1, Q3)) == Point(QuadElem(3), QuadElem(0)));
  CHECK_THROWS_AS(phi_triangle_to_point(TriangleK(4, 3, 6, CurveParams(6, ThetaSlope::pi_over_2()), Q)), std::invalid_argument);
}

TEST_CASE("psi examples") {
  const CurveParams p6(6, ThetaSlope::pi_over_3());
  CHECK(psi_point_to_triangle(Point(QuadElem(-3), root(9, Q5)), p6, Q5)
            .same_sides(TriangleK(root(3, Q5), root(Rational(8, 5), Q5), root(Rational(13, 5), Q5), p6, Q5)));
  const CurveParams p2(2, ThetaSlope::two_pi_over_3());
  const TriangleK t = psi_point_to_triangle(Point(QuadElem(Rational(-12, 7)), root(Rational(36, 49), Q7)), p2, Q7);
  CHECK(t.u == root(Rational(8, 3), Q7));
  CHECK(t.v == root(Rational(3, 7), Q7));
  CHECK(t.w == root(Rational(61, 21), Q7));
  const CurveParams p1(1, ThetaSlope::two_pi_over_3());
  CHECK(psi_point_to_triangle(Point(QuadElem(3, 2, Q3), QuadElem(6, 4, Q3)), p1, Q3).same_sides(TriangleK(2, 2, root(2, Q3), p1, Q3)));
}

TEST_CASE("psi errors") {
  const CurveParams p6(6, ThetaSlope::pi_over_2());
  CHECK_THROWS_AS(psi_point_to_triangle(Point::infinity(), p6, Q), std::invalid_argument);
  CHECK_THROWS_AS(psi_point_to_triangle(Point(QuadElem(6), QuadElem(0)), p6, Q), std::invalid_argument);
  CHECK_THROWS_AS(psi_point_to_triangle(Point(QuadElem(1), QuadElem(1)), p6, Q), OffCurve);
}

TEST_CASE("phi(psi(P)) is +-2P on multiples of seed points") {
  struct Seed {
    CurveParams params;
    FieldDesc field;
    Point point;
  };
  const std::vector<Seed> seeds{
      {CurveParams(6, ThetaSlope::pi_over_3()), Q5, Point(QuadElem(-3), root(9, Q5))},
      {CurveParams(2, ThetaSlope::two_pi_over_3()), Q7, Point(QuadElem(Rational(-12, 7)), root(Rational(36, 49), Q7))},
      {CurveParams(2, ThetaSlope::two_pi_over_3()), Q7, Point(QuadElem(-1), root(1, Q7))},
      {CurveParams(5, ThetaSlope::pi_over_2()), Q, Point(QuadElem(-4), QuadElem(6))},
      {CurveParams(6, ThetaSlope::pi_over_3()), Q, Point(QuadElem(-2), QuadElem(16))},
  };
  int checked = 0;
  for (const Seed& seed : seeds) {
    const Curve E = build_curve(seed.params);
    REQUIRE(E.contains(seed.point));
    for (long m = -10; m <= 10; ++m) {
      const Point P = scalar_mul(m, seed.point, E);
      if (P.is_infinity() || P.y().is_zero()) continue;
      const TriangleK t = psi_point_to_triangle(P, seed.params, seed.field);
      CHECK(verify_triangle(t));
      const Point image = phi_triangle_to_point(t);
      const Point twice = scalar_mul(2L, P, E);
      CHECK((image == twice || image == -twice));
      CHECK(E.contains(image));
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("phi image vanishes exactly on isoceles triangles") {
  const CurveParams p1(1, ThetaSlope::two_pi_over_3());
  CHECK(phi_triangle_to_point(TriangleK(2, 2, root(2, Q3), p1, Q3)).y().is_zero());
  CHECK_FALSE(phi_triangle_to_point(TriangleK(4, 3, 5, CurveParams(6, ThetaSlope::pi_over_2()), Q)).y().is_zero());
}

}  // TEST_SUITE
