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

// Triangles with an angle theta between legs u and v and area
// n sqrt(r^2 - s^2), and their correspondence with points of E_{n,theta}.
//
// Under w^2 = u^2 + v^2 - 2uv s/r and uv = 2nr one has
//   w^2/4 + (r+s)n = (u+v)^2/4,   w^2/4 - (r-s)n = (u-v)^2/4,
// which puts (w^2/4, w(u^2 - v^2)/8) on the curve. Going back, x(2P) and
// x(2P) - e are squares in K for every 2-torsion root e, which recovers u, v
// and w from 2P.

#ifndef THETA_TRIANGLE_HPP_
#define THETA_TRIANGLE_HPP_

#include <string>

#include "theta/curve.hpp"
#include "theta/field.hpp"
#include "theta/params.hpp"

namespace theta {

struct TriangleK {
  // Legs are swapped on construction so that u >= v.
  TriangleK(QuadElem u, QuadElem v, QuadElem w, CurveParams params, FieldDesc field);

  QuadElem u, v, w;
  CurveParams params;
  FieldDesc field;

  // True when {u, v} and w agree with other's, legs in either order.
  bool same_sides(const TriangleK& other) const;
  std::string to_string() const;
};

enum class TriangleDefect { None, NonPositiveSide, LawOfCosines, Area, WrongField };
std::string to_string(TriangleDefect d);

struct TriangleCheck {
  TriangleDefect defect = TriangleDefect::None;
  explicit operator bool() const { return defect == TriangleDefect::None; }
};

// Positivity, the law of cosines at theta and uv = 2nr, all exact.
TriangleCheck verify_triangle(const TriangleK& t);

// (w^2/4, w(u^2 - v^2)/8). Throws on a triangle that does not verify.
Point phi_triangle_to_point(const TriangleK& t);

// Triangle attached to P through 2P. Throws for P = O or y = 0.
TriangleK psi_point_to_triangle(const Point& p, const CurveParams& params, const FieldDesc& K);

}  // namespace theta

#endif  // THETA_TRIANGLE_HPP_
