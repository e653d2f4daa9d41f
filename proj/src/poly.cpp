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

#include "theta/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

PolyQ::PolyQ(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

PolyQ::PolyQ(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs.back() = c;
  return PolyQ(std::move(coeffs));
}

PolyQ PolyQ::linear_root(const Rational& root) { return PolyQ(std::vector<Rational>{-root, Rational(1)}); }

void PolyQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadElem PolyQ::eval(const QuadElem& x) const {
  QuadElem acc = QuadElem(0).lift(x.field());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + QuadElem(*it);
  return acc;
}

PolyQ PolyQ::monic() const {
  const Rational lead = leading();
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c / lead);
  return PolyQ(std::move(out));
}

PolyQ PolyQ::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.emplace_back(coeffs_[i] * static_cast<long>(i));
  return PolyQ(std::move(out));
}

PolyQ PolyQ::shift(const Rational& h) const {
  // Horner in the polynomial ring: p(x + h) = (...(c_n (x+h) + c_{n-1})(x+h) ...)
  const PolyQ x_plus_h(std::vector<Rational>{h, Rational(1)});
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x_plus_h + PolyQ(std::vector<Rational>{*it});
  return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
  if (p.is_zero() || q.is_zero()) return PolyQ();
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return PolyQ(std::move(out));
}

PolyQ operator*(const Rational& c, const PolyQ& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) out.emplace_back(c * a);
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const { return Rational(-1) * *this; }

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& p, const PolyQ& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = p.coeffs();
  const int dd = divisor.degree();
  const int dp = p.degree();
  if (dp < dd) return {PolyQ(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dd) + 1, Rational(0));
  const Rational& lead = divisor.leading();
  for (int k = dp - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::vector<Integer> primitive_integer_coeffs(const PolyQ& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    out.emplace_back(Integer(c.get_num() * (den_lcm / c.get_den())));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

}  // namespace theta
