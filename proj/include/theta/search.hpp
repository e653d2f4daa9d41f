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

// Bounded search for rational points on y^2 = x^3 + A x^2 + B x with integer
// A, B. Rational points have the shape x = m/e^2, y = k/e^3 with gcd(m, e) = 1,
// so the search runs over (e, m) and tests m^3 + A m^2 e^2 + B m e^4 for
// squareness after a quadratic-residue sieve.

#ifndef THETA_SEARCH_HPP_
#define THETA_SEARCH_HPP_

#include <optional>
#include <vector>

#include "theta/curve.hpp"

namespace theta {

struct SearchConfig {
  long denom_bound = 20;        // e_max
  long numer_bound = 1000000;   // |m| bound
  std::optional<long> twist_d;  // default twist for twist evidence
  std::vector<long> sieve_primes{3, 5, 7, 11, 13};

  // Throws on e_max < 1, numer_bound < 1 or a sieve entry that is not an odd prime.
  void validate() const;
};

// Worker count: THETA_FORGE_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned search_threads();

// Affine points with y >= 0, sorted by (e, m). E must be over Q with integer
// coefficients.
std::vector<Point> search_points(const Curve& E, const SearchConfig& cfg);

}  // namespace theta

#endif  // THETA_SEARCH_HPP_
