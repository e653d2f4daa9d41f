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
#include "theta/numbers.hpp"

using namespace theta;

TEST_SUITE("numbers") {

TEST_CASE("is_square_rational") {
  CHECK(is_square_rational(Rational(1225, 64)) == Rational(35, 8));
  CHECK(is_square_rational(Rational(0)) == Rational(0));
  CHECK_FALSE(is_square_rational(Rational(3)).has_value());
  CHECK_FALSE(is_square_rational(Rational(-4)).has_value());
  CHECK_FALSE(is_square_rational(Rational(4, 3)).has_value());
}

TEST_CASE("exact_sqrt") {
  CHECK(exact_sqrt(Integer(144)) == Integer(12));
  CHECK_FALSE(exact_sqrt(Integer(145)).has_value());
  CHECK_FALSE(exact_sqrt(Integer(-1)).has_value());
}

TEST_CASE("qr_mod_p examples") {
  CHECK_FALSE(qr_mod_p(3, 5));
  CHECK_FALSE(qr_mod_p(3, 7));
  CHECK(qr_mod_p(3, 11));
  CHECK(qr_mod_p(-1, 13));
  CHECK_FALSE(qr_mod_p(-1, 7));
}

TEST_CASE("qr_mod_p rejects bad moduli") {
  CHECK_THROWS_AS(qr_mod_p(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(qr_mod_p(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(qr_mod_p(10, 5), std::invalid_argument);
}

TEST_CASE("qr_mod_p agrees with brute force for p <= 200") {
  for (long p = 3; p <= 200; p += 2) {
    if (!is_odd_prime(Integer(p))) continue;
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (long i = 1; i < p; ++i) square[static_cast<std::size_t>(i * i % p)] = true;
    for (long a = 1; a < p; ++a) {
      CAPTURE(p);
      CAPTURE(a);
      CHECK(qr_mod_p(a, p) == square[static_cast<std::size_t>(a)]);
      CHECK(qr_mod_p(a - p, p) == square[static_cast<std::size_t>(a)]);
    }
  }
}

TEST_CASE("factor_smooth") {
  CHECK(factor_smooth(507) == std::vector<PrimePower>{{3, 1}, {13, 2}});
  CHECK(factor_smooth(1).empty());
  CHECK(factor_smooth(30) == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  // 1000003 is prime and below 1001^2.
  CHECK(factor_smooth(Integer(1000003), 1001) == std::vector<PrimePower>{{1000003, 1}});
  const Integer big = Integer(1000003) * Integer(1000033);
  CHECK_THROWS_AS(factor_smooth(big, 1000), FactorizationError);
  try {
    factor_smooth(big, 1000);
  } catch (const FactorizationError& e) {
    CHECK(e.cofactor() == big);
  }
}

TEST_CASE("factor_smooth reproduces n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Integer n = Integer(static_cast<unsigned long>(rng() % 10000000 + 1));
    Integer product = 1;
    for (const auto& pp : factor_smooth(n)) {
      CHECK((is_odd_prime(pp.prime) || pp.prime == 2));
      for (unsigned k = 0; k < pp.exponent; ++k) product *= pp.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("square-free parts") {
  const auto d = square_free_decompose(-507);
  CHECK(d.core == -3);
  CHECK(d.square == 13);
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(12));
  CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("rational text round trip") {
  CHECK(to_exact_string(Rational(3)) == "3/1");
  CHECK(to_exact_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(naive_height(Rational(-7, 3)) == 7);
  CHECK(make_rational(4, -6) == Rational(-2, 3));
}

}  // TEST_SUITE
