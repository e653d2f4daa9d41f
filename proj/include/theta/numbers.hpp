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

// Integer and rational primitives shared by every layer: exact square roots,
// smooth factorization, square-free parts and quadratic residues.

#ifndef THETA_NUMBERS_HPP_
#define THETA_NUMBERS_HPP_

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace theta {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr unsigned long kDefaultFactorBound = 1000000;

// Thrown when trial division up to the bound leaves a cofactor that is not
// provably prime.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const Integer& cofactor, unsigned long bound);
  const Integer& cofactor() const { return cofactor_; }

 private:
  Integer cofactor_;
};

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "num/den", always with an explicit denominator.
std::string to_exact_string(const Rational& q);

// Parses "p", "p/q" or "-p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

std::optional<Integer> exact_sqrt(const Integer& n);

// Nonnegative square root of q when q is the square of a rational.
std::optional<Rational> is_square_rational(const Rational& q);

struct PrimePower {
  Integer prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Trial division. A leftover cofactor is accepted only when it is provably
// prime (every divisor up to its square root was tried).
std::vector<PrimePower> factor_smooth(const Integer& n,
                                      unsigned long bound = kDefaultFactorBound);

// Positive divisors of n (n >= 1), ascending.
std::vector<Integer> divisors(const Integer& n,
                              unsigned long bound = kDefaultFactorBound);

// n = sign * core * square^2 with core square-free and positive.
struct SquareFreeDecomposition {
  Integer core;    // signed square-free part
  Integer square;  // positive
};
SquareFreeDecomposition square_free_decompose(const Integer& n,
                                              unsigned long bound = kDefaultFactorBound);

bool is_square_free(const Integer& n, unsigned long bound = kDefaultFactorBound);

bool is_odd_prime(const Integer& p);

// Euler's criterion. Requires p an odd prime and gcd(a, p) = 1.
bool qr_mod_p(const Integer& a, const Integer& p);

// max(|num|, den)
Integer naive_height(const Rational& q);

}  // namespace theta

#endif  // THETA_NUMBERS_HPP_
