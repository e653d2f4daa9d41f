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

#include "theta/triangle.hpp"

#include <stdexcept>

namespace theta {

TriangleK::TriangleK(QuadElem u_in, QuadElem v_in, QuadElem w_in, CurveParams p, FieldDesc K)
    : u(std::move(u_in)), v(std::move(v_in)), w(std::move(w_in)), params(std::move(p)), field(std::move(K)) {
  if (embedded_less(u, v)) std::swap(u, v);
}

bool TriangleK::same_sides(const TriangleK& other) const {
  if (!(w == other.w)) return false;
  return (u == other.u && v == other.v) || (u == other.v && v == other.u);
}

std::string TriangleK::to_string() const {
  return "(" + u.to_string() + ", " + v.to_string() + ", " + w.to_string() + ")";
}

std::string to_string(TriangleDefect d) {
  switch (d) {
    case TriangleDefect::None: return "ok";
    case TriangleDefect::NonPositiveSide: return "non-positive side";
    case TriangleDefect::LawOfCosines: return "law of cosines fails at theta";
    case TriangleDefect::Area: return "uv != 2nr (wrong area)";
    case TriangleDefect::WrongField: return "side outside the stated field";
  }
  return "?";
}

TriangleCheck verify_triangle(const TriangleK& t) {
  for (const QuadElem* side : {&t.u, &t.v, &t.w}) {
    if (!side->is_rational() && !(side->field() == t.field)) return {TriangleDefect::WrongField};
    if (!is_positive_embedded(*side)) return {TriangleDefect::NonPositiveSide};
  }
  const QuadElem cosine{t.params.theta().cosine()};
  if (!(t.w * t.w == t.u * t.u + t.v * t.v - QuadElem(2) * t.u * t.v * cosine)) return {TriangleDefect::LawOfCosines};
  if (!(t.u * t.v == QuadElem(Rational(2 * t.params.n() * t.params.r())))) return {TriangleDefect::Area};
  return {};
}

Point phi_triangle_to_point(const TriangleK& t) {
  if (const auto check = verify_triangle(t); !check)
    throw std::invalid_argument("phi: triangle " + t.to_string() + " fails verification: " + to_string(check.defect));
  const QuadElem x = t.w * t.w / QuadElem(4);
  const QuadElem y = t.w * (t.u * t.u - t.v * t.v) / QuadElem(8);
  return Point(x.lift(t.field), y.lift(t.field));
}

TriangleK psi_point_to_triangle(const Point& p, const CurveParams& params, const FieldDesc& K) {
  if (p.is_infinity()) throw std::invalid_argument("psi: the point at infinity has no triangle");
  if (p.y().is_zero()) throw std::invalid_argument("psi: 2-torsion point " + p.to_string() + " has no triangle");
  const Curve E = build_curve(params);
  if (!E.contains(p)) throw OffCurve("psi: " + p.to_string() + " is not on " + E.to_string());

  // x(2P) = ((x^2 - B) / 2y)^2 with -B = (r^2 - s^2) n^2
  const QuadElem numerator = p.x() * p.x() - E.B();
  const QuadElem w = abs_embedded(numerator) / abs_embedded(p.y());
  const QuadElem x2 = (w * w) / QuadElem(4);
  const auto sum = sqrt_in_field(x2 - QuadElem(Rational(params.root_neg())), K);
  const auto diff = sqrt_in_field(x2 - QuadElem(Rational(params.root_pos())), K);
  if (!sum || !diff) throw std::logic_error("psi: halving radicands are not squares for " + p.to_string());
  // u + v = 2 sum, u - v = 2 diff
  const QuadElem u = *sum + *diff;
  const QuadElem v = *sum - *diff;
  TriangleK t(u.lift(K), v.lift(K), w.lift(K), params, K);
  if (const auto check = verify_triangle(t); !check)
    throw std::logic_error("psi produced an invalid triangle " + t.to_string() + ": " + to_string(check.defect));
  return t;
}

}  // namespace theta
