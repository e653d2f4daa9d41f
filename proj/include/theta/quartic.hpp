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

// Rational roots, quadratic splittings and Galois types of low-degree
// polynomials, plus the 3-torsion quartic attached to a slope (r, s).
//
// Resolvent convention: for the depressed monic quartic y^4 + P y^2 + Q y + C
// the resolvent cubic is t^3 - P t^2 - 4C t + (4PC - Q^2), whose roots are
// a1 a2 + a3 a4, a1 a3 + a2 a4, a1 a4 + a2 a3.

#ifndef THETA_QUARTIC_HPP_
#define THETA_QUARTIC_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/field.hpp"
#include "theta/params.hpp"
#include "theta/poly.hpp"

namespace theta {

// x^4 - 6(3r^2+s^2) x^2 + 8s(9r^2-s^2) x - 3(3r^2+s^2)^2
PolyQ build_f_quartic(const ThetaSlope& theta);
PolyQ build_f_quartic(const Integer& r, const Integer& s);

// Distinct rational roots, ascending. Candidates come from the Rational Root
// Theorem: +-a/b with a | constant term and b | leading coefficient of the
// primitive integer form. Throws FactorizationError when either coefficient
// is not smooth enough for factor_smooth.
std::vector<Rational> rational_roots(const PolyQ& p, unsigned long bound = kDefaultFactorBound);

// Same result without any factoring: integer roots of the monic integer
// transform are isolated with Sturm sequences and bisection over
// half-integer endpoints. Used when rational_roots cannot factor.
std::vector<Rational> rational_roots_isolated(const PolyQ& p);

// rational_roots, falling back to rational_roots_isolated on
// FactorizationError.
std::vector<Rational> rational_roots_robust(const PolyQ& p);

enum class GaloisType { S4, A4, D4, C4, V4, Reducible };
std::string to_string(GaloisType g);

struct QuarticReport {
  bool irreducible_over_q = false;
  std::vector<Rational> rational_roots;
  std::optional<std::pair<PolyQ, PolyQ>> quadratic_split;
  PolyQ depressed;  // y^4 + P y^2 + Q y + C after x = y - a3/(4 a4), made monic
  PolyQ resolvent;
  Rational discriminant;
  GaloisType galois_type = GaloisType::Reducible;
};

// Requires degree 4 and nonzero discriminant.
QuarticReport quartic_analyze(const PolyQ& p);

// Discriminant of a degree-4 polynomial (including leading-coefficient scaling).
Rational quartic_discriminant(const PolyQ& p);

// Factors a quartic with no rational roots into two monic-up-to-lead quadratics
// over Q, if such a factorization exists. The first factor carries the
// leading coefficient; the product reproduces p exactly.
std::optional<std::pair<PolyQ, PolyQ>> split_into_quadratics(const PolyQ& p);

struct ModSRootAnalysis {
  // 3 is a quadratic residue mod every prime factor p >= 5 of |s|. The
  // primes 2 and 3 impose nothing: for p = 3 the discriminant 432 r^4 vanishes.
  bool qr3_holds = true;
  // k^4 - 18 r^2 k^2 - 27 r^4 = 0 has a solution in Z/|s|; enumerated only for
  // |s| <= kResidueEnumerationCap, absent otherwise.
  std::optional<bool> residue_roots_exist;
  std::vector<Integer> failing_primes;
};

inline constexpr long kResidueEnumerationCap = 100000;

// Requires s != 0.
ModSRootAnalysis mod_s_root_analysis(const ThetaSlope& theta);

// All roots of p (degree <= 4) in K, without repetition. Rational roots are
// listed first. K may be Q.
std::vector<QuadElem> roots_in_quadratic_field(const PolyQ& p, const FieldDesc& K);

enum class CubicObstruction { ObstructionProven, Inconclusive };
std::string to_string(CubicObstruction c);

// ObstructionProven when the slope's quartic has no rational root: every root
// then has degree 2 or 4 over Q and cannot lie in a cubic field.
CubicObstruction cubic_field_obstruction(const ThetaSlope& theta);

}  // namespace theta

#endif  // THETA_QUARTIC_HPP_
