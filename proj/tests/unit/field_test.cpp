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
#include "theta/field.hpp"

using namespace theta;

namespace {

const FieldDesc Q3 = FieldDesc::real_quadratic(3);
const FieldDesc Q5 = FieldDesc::real_quadratic(5);

QuadElem random_elem(std::mt19937_64& rng, const FieldDesc& K) {
  auto small = [&rng] {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
  };
  Rational a = small(), b = small();
  a.canonicalize();
  b.canonicalize();
  return QuadElem(a, b, K);
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("field descriptors") {
  CHECK(FieldDesc::rationals().is_rational());
  CHECK(Q5.d() == 5);
  CHECK(Q5.to_string() == "Q(sqrt(5))");
  CHECK_THROWS(FieldDesc::real_quadratic(12));
  CHECK_THROWS(FieldDesc::real_quadratic(1));
  const auto reduced = FieldDesc::from_radicand(20);
  CHECK(reduced.field == Q5);
  CHECK(reduced.scale == 2);
  CHECK(FieldDesc::from_radicand(49).field.is_rational());
}

TEST_CASE("quad_arith examples") {
  CHECK(QuadElem(1, 1, Q5) * QuadElem(1, -1, Q5) == QuadElem(-4));
  CHECK(QuadElem(2, 1, Q3) * QuadElem(2, 1, Q3) == QuadElem(7, 4, Q3));
  CHECK(QuadElem(84, 48, Q3) / QuadElem(6, 4, Q3) == QuadElem(6, 4, Q3));
  CHECK(quad_arith(QuadElem(1, 2, Q3), QuadElem(3, -1, Q3), ArithOp::Sub) == QuadElem(-2, 3, Q3));
  CHECK(quad_arith(QuadElem(1, 2, Q3), QuadElem(3), ArithOp::Add) == QuadElem(4, 2, Q3));
}

TEST_CASE("arithmetic errors") {
  CHECK_THROWS_AS(QuadElem(1, 1, Q3) + QuadElem(1, 1, Q5), FieldMismatch);
  CHECK_THROWS(QuadElem(1, 1, Q3) / QuadElem(0));
  CHECK_THROWS(QuadElem(1, 1, Q3).lift(Q5));
}

TEST_CASE("with_radicand reduces") {
  const QuadElem x = QuadElem::with_radicand(1, 1, 12);  // 1 + sqrt(12) = 1 + 2 sqrt(3)
  CHECK(x == QuadElem(1, 2, Q3));
  CHECK(QuadElem::with_radicand(0, 3, 4) == QuadElem(6));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (const FieldDesc& K : {Q3, Q5, FieldDesc::real_quadratic(13)}) {
    for (int i = 0; i < 200; ++i) {
      const QuadElem x = random_elem(rng, K), y = random_elem(rng, K), z = random_elem(rng, K);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == QuadElem(0));
      if (!x.is_zero()) {
        CHECK(x * (QuadElem(1) / x) == QuadElem(1));
        CHECK(QuadElem(x.norm()) == x * x.conjugate());
      }
    }
  }
}

TEST_CASE("sqrt_in_field examples") {
  CHECK(sqrt_in_field(QuadElem(12), Q3) == QuadElem(0, 2, Q3));
  CHECK(sqrt_in_field(QuadElem(4), Q5) == QuadElem(2));
  CHECK(sqrt_in_field(QuadElem(84, 48, Q3), Q3) == QuadElem(6, 4, Q3));
  CHECK(sqrt_in_field(QuadElem(0), Q3) == QuadElem(0));
  CHECK_FALSE(sqrt_in_field(QuadElem(-4), Q3).has_value());
  CHECK_FALSE(sqrt_in_field(QuadElem(12), FieldDesc::rationals()).has_value());
  CHECK_FALSE(sqrt_in_field(QuadElem(2), Q3).has_value());
  // 96 + 48 sqrt(3) has norm 9216 - 6912 = 2304 = 48^2, yet (96 +- 48)/2 are not rational squares.
  CHECK_FALSE(sqrt_in_field(QuadElem(96, 48, Q3), Q3).has_value());
}

TEST_CASE("sqrt_in_field squares back and is nonnegative") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    const QuadElem y = random_elem(rng, Q5);
    const auto root = sqrt_in_field(y * y, Q5);
    REQUIRE(root.has_value());
    CHECK(*root * *root == y * y);
    CHECK(embedded_sign(*root) >= 0);
    CHECK(*root == abs_embedded(y));
  }
}

TEST_CASE("sqrt_in_field on rationals matches exhaustive search") {
  // x = a is a square in Q(sqrt 3) iff a = p^2 or a = 3 q^2 with p, q rational.
  for (long num = -60; num <= 60; ++num) {
    for (long den = 1; den <= 12; ++den) {
      const Rational a = make_rational(num, den);
      bool expected = false;
      if (sgn(a) >= 0) {
        for (long pn = 0; pn <= 60 && !expected; ++pn)
          for (long pd = 1; pd <= 12 && !expected; ++pd) {
            const Rational p(pn, pd);
            expected = p * p == a || 3 * p * p == a;
          }
      }
      CAPTURE(num);
      CAPTURE(den);
      CHECK(sqrt_in_field(QuadElem(a), Q3).has_value() == expected);
    }
  }
}

TEST_CASE("positivity under the embedding") {
  CHECK(is_positive_embedded(QuadElem(0, Rational(13, 5), Q5)));
  CHECK(is_positive_embedded(QuadElem(-1, 1, Q3)));
  CHECK_FALSE(is_positive_embedded(QuadElem(2, -1, Q5)));
  CHECK_FALSE(is_positive_embedded(QuadElem(0)));
  CHECK(embedded_less(QuadElem(2), QuadElem(0, 1, Q5)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const QuadElem x = random_elem(rng, Q3);
    if (x.is_zero()) continue;
    CHECK(is_positive_embedded(x) != is_positive_embedded(-x));
  }
}

TEST_CASE("printing") {
  CHECK(QuadElem(Rational(3, 2), Rational(5, 7), FieldDesc::real_quadratic(13)).to_string() == "3/2 + 5/7*sqrt(13)");
  CHECK(QuadElem(0, 9, Q5).to_string() == "9*sqrt(5)");
  CHECK(QuadElem(Rational(-1, 2)).to_string() == "-1/2");
}

}  // TEST_SUITE
