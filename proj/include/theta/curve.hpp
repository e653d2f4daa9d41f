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

// Curves y^2 = x^3 + A x^2 + B x over Q or Q(sqrt(d)) and their group law.
//
// E_{n,theta}: y^2 = x (x + (r+s) n) (x - (r-s) n), i.e. A = 2sn and
// B = -(r^2 - s^2) n^2.

#ifndef THETA_CURVE_HPP_
#define THETA_CURVE_HPP_

#include <optional>
#include <string>
#include <utility>

#include "theta/field.hpp"
#include "theta/params.hpp"
#include "theta/poly.hpp"

namespace theta {

class OffCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Point {
 public:
  Point() = default;  // the point at infinity
  Point(QuadElem x, QuadElem y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  static Point infinity() { return Point(); }

  bool is_infinity() const { return !xy_.has_value(); }
  const QuadElem& x() const;
  const QuadElem& y() const;
  // Field of the coordinates; Q for infinity.
  FieldDesc field() const;

  Point operator-() const;
  friend bool operator==(const Point& p, const Point& q);

  std::string to_string() const;

 private:
  std::optional<std::pair<QuadElem, QuadElem>> xy_;
};

class Curve {
 public:
  // Throws if singular (B = 0 or A^2 - 4B = 0).
  Curve(const QuadElem& A, const QuadElem& B);

  const QuadElem& A() const { return a_; }
  const QuadElem& B() const { return b_; }
  const FieldDesc& field() const { return field_; }
  bool defined_over_q() const { return a_.is_rational() && b_.is_rational(); }

  // x^3 + A x^2 + B x
  QuadElem rhs(const QuadElem& x) const;
  // The right-hand side as a polynomial; requires rational coefficients.
  PolyQ rhs_poly() const;
  bool contains(const Point& p) const;

  // "y^2 = x^3 + 12*x^2 - 108*x"
  std::string to_string() const;

  friend bool operator==(const Curve& e, const Curve& f) { return e.a_ == f.a_ && e.b_ == f.b_; }

 private:
  QuadElem a_;
  QuadElem b_;
  FieldDesc field_;
};

// E_{n,theta} over Q.
Curve build_curve(const CurveParams& p);

// Chord-tangent addition. Throws OffCurve if either input is not on E.
Point ell_add(const Point& p, const Point& q, const Curve& E);
// Same law without the membership checks, for inner loops on known points.
Point ell_add_unchecked(const Point& p, const Point& q, const Curve& E);

// m * P by double-and-add; negative m negates.
Point scalar_mul(const Integer& m, const Point& p, const Curve& E);
Point scalar_mul(long m, const Point& p, const Curve& E);

// Third division polynomial 3x^4 + 4A x^3 + 6B x^2 - B^2; E over Q.
PolyQ psi3(const Curve& E);

// A -> dA, B -> d^2 B.
Curve quadratic_twist(const Curve& E, const Integer& d);

// (x, y) on E^d(Q) -> (x/d, y sqrt(d) / d^2) on E(Q(sqrt d)), where E is
// recovered from the twist. Requires d >= 2 square-free.
Point transport_twist_point(const Point& p, const Curve& twisted, const Integer& d);

// The untwisted curve E given E^d.
Curve untwist(const Curve& twisted, const Integer& d);

// Largest possible torsion order: 12 over Q, 18 over a quadratic field.
int torsion_order_bound(const FieldDesc& K);

// True iff m P != O for every 1 <= m <= torsion_order_bound(K), which
// certifies infinite order.
bool certify_non_torsion(const Point& p, const Curve& E, const FieldDesc& K);

// Exact order when P is torsion within the bound, else nullopt.
std::optional<int> torsion_order(const Point& p, const Curve& E, const FieldDesc& K);

}  // namespace theta

#endif  // THETA_CURVE_HPP_
