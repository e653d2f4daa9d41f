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

#include "theta/field.hpp"

namespace theta {

FieldDesc FieldDesc::real_quadratic(const Integer& d) {
  if (d < 2) throw std::invalid_argument("real quadratic field needs d >= 2, got " + d.get_str());
  if (!is_square_free(d)) throw std::invalid_argument("field radicand " + d.get_str() + " is not square-free");
  return FieldDesc(Kind::RealQuadratic, d);
}

FieldDesc::Reduced FieldDesc::from_radicand(const Integer& radicand) {
  if (radicand < 1) throw std::invalid_argument("radicand must be positive, got " + radicand.get_str());
  const auto [core, square] = square_free_decompose(radicand);
  if (core == 1) return {FieldDesc(), square};
  return {FieldDesc(Kind::RealQuadratic, core), square};
}

std::string FieldDesc::to_string() const {
  return is_rational() ? "Q" : "Q(sqrt(" + d_.get_str() + "))";
}

QuadElem::QuadElem(const Rational& a, const Rational& b, const FieldDesc& field)
    : a_(a), b_(b), field_(field) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rational() && sgn(b_) != 0)
    throw std::invalid_argument("irrational part given for an element of Q");
}

QuadElem QuadElem::with_radicand(const Rational& a, const Rational& b, const Integer& radicand) {
  if (sgn(b) == 0) return QuadElem(a);
  const auto [field, scale] = FieldDesc::from_radicand(radicand);
  if (field.is_rational()) return QuadElem(a + b * scale);
  return QuadElem(a, b * scale, field);
}

QuadElem QuadElem::lift(const FieldDesc& K) const {
  if (field_ == K) return *this;
  if (!field_.is_rational())
    throw FieldMismatch("cannot move an element of " + field_.to_string() + " into " + K.to_string());
  return QuadElem(a_, 0, K);
}

FieldDesc common_field(const FieldDesc& a, const FieldDesc& b) {
  if (a == b || b.is_rational()) return a;
  if (a.is_rational()) return b;
  throw FieldMismatch("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

QuadElem& QuadElem::operator+=(const QuadElem& y) {
  field_ = common_field(field_, y.field_);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& y) {
  field_ = common_field(field_, y.field_);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& y) {
  field_ = common_field(field_, y.field_);
  const Rational a = a_ * y.a_ + field_.d() * b_ * y.b_;
  const Rational b = a_ * y.b_ + y.a_ * b_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& y) {
  field_ = common_field(field_, y.field_);
  if (y.is_zero()) throw std::domain_error("division by zero in " + field_.to_string());
  const Rational n = y.a_ * y.a_ - field_.d() * y.b_ * y.b_;
  const Rational a = (a_ * y.a_ - field_.d() * b_ * y.b_) / n;
  const Rational b = (b_ * y.a_ - a_ * y.b_) / n;
  a_ = a;
  b_ = b;
  return *this;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.field_ == y.field_;
}

std::string QuadElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string irrational = (b_ == 1 ? std::string() : (b_ == -1 ? std::string("-") : b_.get_str() + "*")) +
                           "sqrt(" + field_.d().get_str() + ")";
  if (sgn(a_) == 0) return irrational;
  if (sgn(b_) < 0) {
    const Rational mb = -b_;
    irrational = (mb == 1 ? std::string() : mb.get_str() + "*") + "sqrt(" + field_.d().get_str() + ")";
    return a_.get_str() + " - " + irrational;
  }
  return a_.get_str() + " + " + irrational;
}

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw std::logic_error("unreachable arithmetic op");
}

int embedded_sign(const QuadElem& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // mixed signs: compare a^2 against d b^2
  const int cmp_sq = cmp(x.a() * x.a(), x.field().d() * x.b() * x.b());
  return cmp_sq > 0 ? sa : sb;
}

bool is_positive_embedded(const QuadElem& x) { return embedded_sign(x) > 0; }

QuadElem abs_embedded(const QuadElem& x) { return embedded_sign(x) < 0 ? -x : x; }

bool embedded_less(const QuadElem& x, const QuadElem& y) { return embedded_sign(y - x) > 0; }

std::optional<QuadElem> sqrt_in_field(const QuadElem& x_in, const FieldDesc& K) {
  const QuadElem x = x_in.lift(K);
  const int sign = embedded_sign(x);
  if (sign < 0) return std::nullopt;
  if (sign == 0) return QuadElem(0).lift(K);
  if (x.is_rational()) {
    if (auto p = is_square_rational(x.a())) return QuadElem(*p).lift(K);
    if (K.is_rational()) return std::nullopt;
    if (auto q = is_square_rational(x.a() / K.d())) return QuadElem(0, *q, K);
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = a + b sqrt d  <=>  p^2 + d q^2 = a, 2pq = b; so the
  // norm a^2 - d b^2 = (p^2 - d q^2)^2 must be a rational square N^2 and
  // p^2 is one of (a +- N)/2.
  const auto n = is_square_rational(x.norm());
  if (!n) return std::nullopt;
  for (const Rational& p_sq : {Rational((x.a() + *n) / 2), Rational((x.a() - *n) / 2)}) {
    const auto p = is_square_rational(p_sq);
    if (!p || sgn(*p) == 0) continue;
    const Rational q = x.b() / (2 * *p);
    if (p_sq + K.d() * q * q != x.a()) continue;
    return abs_embedded(QuadElem(*p, q, K));
  }
  return std::nullopt;
}

}  // namespace theta
