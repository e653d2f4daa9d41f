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

// Dense univariate polynomials over Q. Low degree dominates, so the
// representation is a plain coefficient vector, ascending by degree.

#ifndef THETA_POLY_HPP_
#define THETA_POLY_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "theta/field.hpp"
#include "theta/numbers.hpp"

namespace theta {

class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> ascending);
  PolyQ(std::initializer_list<long> ascending);

  static PolyQ monomial(const Rational& c, int degree);
  // x - root
  static PolyQ linear_root(const Rational& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  QuadElem eval(const QuadElem& x) const;

  PolyQ monic() const;
  PolyQ derivative() const;
  // p(x + h)
  PolyQ shift(const Rational& h) const;

  PolyQ& operator+=(const PolyQ& other);
  PolyQ& operator-=(const PolyQ& other);
  friend PolyQ operator+(PolyQ p, const PolyQ& q) { return p += q; }
  friend PolyQ operator-(PolyQ p, const PolyQ& q) { return p -= q; }
  friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator*(const Rational& c, const PolyQ& p);
  PolyQ operator-() const;

  bool operator==(const PolyQ& other) const { return coeffs_ == other.coeffs_; }

  // "x^4 - 78*x^2 + 280*x - 507"
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division: p = q * divisor + r with deg r < deg divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& p, const PolyQ& divisor);

PolyQ gcd(PolyQ a, PolyQ b);

// p scaled by a positive rational so that all coefficients are coprime
// integers. Returned as integers, ascending.
std::vector<Integer> primitive_integer_coeffs(const PolyQ& p);

}  // namespace theta

#endif  // THETA_POLY_HPP_
