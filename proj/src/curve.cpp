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

#include "theta/curve.hpp"

#include <stdexcept>

namespace theta {

const QuadElem& Point::x() const {
  if (!xy_) throw std::logic_error("point at infinity has no x-coordinate");
  return xy_->first;
}

const QuadElem& Point::y() const {
  if (!xy_) throw std::logic_error("point at infinity has no y-coordinate");
  return xy_->second;
}

FieldDesc Point::field() const {
  if (!xy_) return FieldDesc::rationals();
  return common_field(xy_->first.field(), xy_->second.field());
}

Point Point::operator-() const {
  if (!xy_) return *this;
  return Point(xy_->first, -xy_->second);
}

bool operator==(const Point& p, const Point& q) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  return p.x() == q.x() && p.y() == q.y();
}

std::string Point::to_string() const {
  if (!xy_) return "O";
  return "(" + xy_->first.to_string() + ", " + xy_->second.to_string() + ")";
}

Curve::Curve(const QuadElem& A, const QuadElem& B) : a_(A), b_(B), field_(common_field(A.field(), B.field())) {
  if (b_.is_zero() || (a_ * a_ - QuadElem(4) * b_).is_zero())
    throw std::invalid_argument("singular curve: need B != 0 and A^2 - 4B != 0");
}

QuadElem Curve::rhs(const QuadElem& x) const { return ((x + a_) * x + b_) * x; }

PolyQ Curve::rhs_poly() const {
  if (!defined_over_q()) throw std::invalid_argument("curve is not defined over Q");
  return PolyQ(std::vector<Rational>{Rational(0), b_.a(), a_.a(), Rational(1)});
}

bool Curve::contains(const Point& p) const {
  if (p.is_infinity()) return true;
  return p.y() * p.y() == rhs(p.x());
}

std::string Curve::to_string() const {
  if (defined_over_q()) return "y^2 = " + rhs_poly().to_string();
  return "y^2 = x^3 + (" + a_.to_string() + ")*x^2 + (" + b_.to_string() + ")*x";
}

Curve build_curve(const CurveParams& p) {
  const Integer A = 2 * p.s() * p.n();
  const Integer B = -p.theta().sine_radicand() * p.n() * p.n();
  return Curve(QuadElem(Rational(A)), QuadElem(Rational(B)));
}

Point ell_add_unchecked(const Point& p, const Point& q, const Curve& E) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  QuadElem slope;
  if (p.x() == q.x()) {
    if ((p.y() + q.y()).is_zero()) return Point::infinity();
    slope = (QuadElem(3) * p.x() * p.x() + QuadElem(2) * E.A() * p.x() + E.B()) / (QuadElem(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  QuadElem x3 = slope * slope - E.A() - p.x() - q.x();
  QuadElem y3 = slope * (p.x() - x3) - p.y();
  return Point(std::move(x3), std::move(y3));
}

Point ell_add(const Point& p, const Point& q, const Curve& E) {
  if (!E.contains(p)) throw OffCurve("ell_add: " + p.to_string() + " is not on " + E.to_string());
  if (!E.contains(q)) throw OffCurve("ell_add: " + q.to_string() + " is not on " + E.to_string());
  return ell_add_unchecked(p, q, E);
}

Point scalar_mul(const Integer& m, const Point& p, const Curve& E) {
  if (!E.contains(p)) throw OffCurve("scalar_mul: " + p.to_string() + " is not on " + E.to_string());
  Integer k = abs(m);
  Point base = sgn(m) < 0 ? -p : p;
  Point acc;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t()) != 0) acc = ell_add_unchecked(acc, base, E);
    k >>= 1;
    if (k > 0) base = ell_add_unchecked(base, base, E);
  }
  return acc;
}

Point scalar_mul(long m, const Point& p, const Curve& E) { return scalar_mul(Integer(m), p, E); }

PolyQ psi3(const Curve& E) {
  if (!E.defined_over_q()) throw std::invalid_argument("psi3 needs a curve over Q");
  const Rational& A = E.A().a();
  const Rational& B = E.B().a();
  return PolyQ(std::vector<Rational>{Rational(-B * B), Rational(0), Rational(6 * B), Rational(4 * A), Rational(3)});
}

Curve quadratic_twist(const Curve& E, const Integer& d) {
  if (d == 0 || d == 1) throw std::invalid_argument("twist parameter must differ from 0 and 1");
  if (!is_square_free(d)) throw std::invalid_argument("twist parameter " + d.get_str() + " is not square-free");
  const QuadElem dd{Rational(d)};
  return Curve(dd * E.A(), dd * dd * E.B());
}

Curve untwist(const Curve& twisted, const Integer& d) {
  const QuadElem dd{Rational(d)};
  return Curve(twisted.A() / dd, twisted.B() / (dd * dd));
}

Point transport_twist_point(const Point& p, const Curve& twisted, const Integer& d) {
  if (p.is_infinity()) throw std::invalid_argument("transport_twist_point needs an affine point");
  if (!twisted.contains(p)) throw OffCurve("transport: " + p.to_string() + " is not on " + twisted.to_string());
  const FieldDesc K = FieldDesc::real_quadratic(d);
  const Rational dq(d);
  const Point image(QuadElem(p.x().a() / dq).lift(K), QuadElem(0, p.y().a() / (dq * dq), K));
  const Curve base = untwist(twisted, d);
  if (!base.contains(image)) throw std::logic_error("transported point left the curve: " + image.to_string());
  return image;
}

int torsion_order_bound(const FieldDesc& K) { return K.is_rational() ? 12 : 18; }

std::optional<int> torsion_order(const Point& p, const Curve& E, const FieldDesc& K) {
  if (!E.contains(p)) throw OffCurve(p.to_string() + " is not on " + E.to_string());
  Point acc = p;
  for (int m = 1; m <= torsion_order_bound(K); ++m) {
    if (acc.is_infinity()) return m;
    acc = ell_add_unchecked(acc, p, E);
  }
  return std::nullopt;
}

bool certify_non_torsion(const Point& p, const Curve& E, const FieldDesc& K) {
  return !torsion_order(p, E, K).has_value();
}

}  // namespace theta
