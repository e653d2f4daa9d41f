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

// Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).
//
// Every field is ordered through its canonical real embedding sqrt(d) > 0, so
// signs, absolute values and comparisons are exact.

#ifndef THETA_FIELD_HPP_
#define THETA_FIELD_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "theta/numbers.hpp"

namespace theta {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldDesc {
 public:
  enum class Kind { Rationals, RealQuadratic };

  FieldDesc() = default;  // Q

  static FieldDesc rationals() { return FieldDesc(); }
  // d must already be square-free and >= 2.
  static FieldDesc real_quadratic(const Integer& d);

  // Q(sqrt(radicand)) for any positive radicand, with the square part pulled
  // out: radicand = scale^2 * d. A perfect square yields Q.
  struct Reduced;
  static Reduced from_radicand(const Integer& radicand);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  // The radicand; 1 for Q.
  const Integer& d() const { return d_; }

  std::string to_string() const;

  bool operator==(const FieldDesc& other) const { return kind_ == other.kind_ && d_ == other.d_; }

 private:
  FieldDesc(Kind kind, Integer d) : kind_(kind), d_(std::move(d)) {}

  Kind kind_ = Kind::Rationals;
  Integer d_ = 1;
};

struct FieldDesc::Reduced {
  FieldDesc field;
  Integer scale;
};

// a + b*sqrt(d) in the field K; b == 0 whenever K is Q.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long a) : a_(a) {}  // NOLINT: implicit from integers is intended
  QuadElem(const Rational& a) : a_(a) {}  // NOLINT
  QuadElem(const Rational& a, const Rational& b, const FieldDesc& field);

  // a + b*sqrt(radicand), reducing the radicand to its square-free part.
  static QuadElem with_radicand(const Rational& a, const Rational& b, const Integer& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const FieldDesc& field() const { return field_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // Same value viewed in K. Only Q -> K (or K -> K) is allowed.
  QuadElem lift(const FieldDesc& K) const;

  QuadElem conjugate() const { return QuadElem(a_, -b_, field_); }
  Rational norm() const { return a_ * a_ - field_.d() * b_ * b_; }

  QuadElem operator-() const { return QuadElem(-a_, -b_, field_); }
  QuadElem& operator+=(const QuadElem& y);
  QuadElem& operator-=(const QuadElem& y);
  QuadElem& operator*=(const QuadElem& y);
  QuadElem& operator/=(const QuadElem& y);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  // Componentwise; an element of Q equals its lift into any K.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

  // Human-readable, e.g. "3/2 + 5/7*sqrt(13)".
  std::string to_string() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  FieldDesc field_;
};

enum class ArithOp { Add, Sub, Mul, Div };

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, ArithOp op);

// The smallest field containing both operands' fields; throws FieldMismatch
// for two distinct quadratic fields.
FieldDesc common_field(const FieldDesc& a, const FieldDesc& b);

// Sign under the canonical embedding: -1, 0 or +1.
int embedded_sign(const QuadElem& x);

// Strictly positive under the canonical embedding.
bool is_positive_embedded(const QuadElem& x);

QuadElem abs_embedded(const QuadElem& x);

// x < y under the canonical embedding.
bool embedded_less(const QuadElem& x, const QuadElem& y);

// Nonnegative square root of x inside K, if one exists. Negative x has none.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x, const FieldDesc& K);

}  // namespace theta

#endif  // THETA_FIELD_HPP_
