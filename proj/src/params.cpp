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

#include "theta/params.hpp"

#include <stdexcept>

namespace theta {

ThetaSlope::ThetaSlope(const Integer& r, const Integer& s) : r_(r), s_(s) {
  if (r_ < 1) throw std::invalid_argument("theta: r must be positive, got " + r_.get_str());
  Integer g;
  mpz_gcd(g.get_mpz_t(), r_.get_mpz_t(), s_.get_mpz_t());
  if (g != 1) throw std::invalid_argument("theta: gcd(r, s) must be 1 for " + to_string());
  if (abs(s_) >= r_) throw std::invalid_argument("theta: need |s| < r so that theta lies in (0, pi), got " + to_string());
}

ThetaSlope ThetaSlope::parse(const std::string& cosine) {
  const Rational c = parse_rational(cosine);
  return ThetaSlope(c.get_den(), c.get_num());
}

CurveParams::CurveParams(const Integer& n, const ThetaSlope& theta) : n_(n), theta_(theta) {
  if (n_ < 1) throw std::invalid_argument("n must be a positive integer, got " + n_.get_str());
  if (!is_square_free(n_))
    throw std::invalid_argument("n = " + n_.get_str() + " is not square-free; pass its square-free part " +
                                square_free_decompose(n_).core.get_str() + " explicitly");
}

}  // namespace theta
