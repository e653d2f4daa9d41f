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

// Torsion of E_{n,theta} over Q and real quadratic fields: 3-torsion from the
// third division polynomial, 4- and 8-torsion by halving.

#ifndef THETA_TORSION_HPP_
#define THETA_TORSION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "theta/curve.hpp"
#include "theta/field.hpp"
#include "theta/params.hpp"

namespace theta {

struct ThreeTorsionProbe {
  std::vector<QuadElem> psi3_roots;  // roots of psi3 lying in K
  std::optional<Point> point;        // verified order-3 point, if any
  // A root of psi3 lies in K but x^3 + A x^2 + B x is not a square there:
  // the root-only criterion says yes while the full criterion says no.
  bool root_only_disagrees = false;
};

ThreeTorsionProbe probe_three_torsion(const Curve& E, const FieldDesc& K);
std::optional<Point> three_torsion_in_K(const Curve& E, const FieldDesc& K);

// Points P over K with 2P = target, each verified by doubling. A point
// (x0, y0) on a curve with full 2-torsion e1, e2, e3 halves over K iff every
// x0 - e_i is a square in K.
std::vector<Point> halve_point(const Point& target, const CurveParams& params, const FieldDesc& K);

struct FourTorsionProbe {
  bool square_criterion = false;  // 2r(r - s) is a square in K
  std::optional<Point> point;     // verified order-4 point, if any
};

FourTorsionProbe probe_four_torsion(const CurveParams& params, const FieldDesc& K);
std::optional<Point> four_torsion_in_K(const CurveParams& params, const FieldDesc& K);

enum class TorsionGroup { Z2xZ2, Z2xZ4, Z2xZ6, Z2xZ8, Z2xZ12 };
std::string to_string(TorsionGroup g);

struct TorsionReport {
  TorsionGroup group = TorsionGroup::Z2xZ2;
  std::vector<Point> witnesses;  // points of order 3, 4 or 8
  bool complete = true;
  ThreeTorsionProbe three;
  FourTorsionProbe four;
};

TorsionReport torsion_subgroup(const CurveParams& params, const FieldDesc& K);

}  // namespace theta

#endif  // THETA_TORSION_HPP_
