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

#include "theta/numbers.hpp"

#include <algorithm>
#include <cctype>

namespace theta {

FactorizationError::FactorizationError(const Integer& cofactor, unsigned long bound)
    : std::runtime_error("factor_smooth: cofactor " + cofactor.get_str() +
                         " has no prime factor <= " + std::to_string(bound) +
                         " and is not provably prime"),
      cofactor_(cofactor) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_exact_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  const Integer n(num[0] == '+' ? num.substr(1) : num);
  const Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(n, d);
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return Integer(sqrt(n));
}

std::optional<Rational> is_square_rational(const Rational& q) {
  const auto num = exact_sqrt(q.get_num());
  if (!num) return std::nullopt;
  const auto den = exact_sqrt(q.get_den());
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

std::vector<PrimePower> factor_smooth(const Integer& n, unsigned long bound) {
  if (n < 1) throw std::invalid_argument("factor_smooth: n must be >= 1");
  std::vector<PrimePower> out;
  Integer m = n;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.push_back({Integer(p), e});
  };
  strip(2);
  unsigned long p = 3;
  for (; p <= bound && Integer(p) * p <= m; p += 2) strip(p);
  if (m == 1) return out;
  if (Integer(p) * p > m) {
    out.push_back({m, 1});
    return out;
  }
  throw FactorizationError(m, bound);
}

std::vector<Integer> divisors(const Integer& n, unsigned long bound) {
  std::vector<Integer> divs{1};
  for (const auto& [prime, exponent] : factor_smooth(n, bound)) {
    const std::size_t count = divs.size();
    Integer power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

SquareFreeDecomposition square_free_decompose(const Integer& n, unsigned long bound) {
  if (n == 0) throw std::invalid_argument("square-free part of zero");
  Integer core = sgn(n) < 0 ? -1 : 1;
  Integer square = 1;
  for (const auto& [prime, exponent] : factor_smooth(abs(n), bound)) {
    if (exponent % 2 == 1) core *= prime;
    for (unsigned e = 0; e < exponent / 2; ++e) square *= prime;
  }
  return {core, square};
}

bool is_square_free(const Integer& n, unsigned long bound) {
  return square_free_decompose(n, bound).square == 1;
}

bool is_odd_prime(const Integer& p) {
  return p > 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

bool qr_mod_p(const Integer& a, const Integer& p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("qr_mod_p: " + p.get_str() + " is not an odd prime");
  Integer residue;
  mpz_mod(residue.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (residue == 0) throw std::invalid_argument("qr_mod_p: modulus divides " + a.get_str());
  const Integer exponent = (p - 1) / 2;
  Integer result;
  mpz_powm(result.get_mpz_t(), residue.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
  return result == 1;
}

Integer naive_height(const Rational& q) {
  const Integer num = abs(q.get_num());
  return num > q.get_den() ? num : Integer(q.get_den());
}

}  // namespace theta
