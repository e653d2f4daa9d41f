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

#include "theta/torsion.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "theta/quartic.hpp"

namespace theta {
namespace {

bool has_exact_order(const Point& p, long order, const Curve& E) {
  if (!scalar_mul(order, p, E).is_infinity()) return false;
  // order is 3, 4 or 8: a proper divisor check on order / prime suffices
  const long smaller = order % 2 == 0 ? order / 2 : 1;
  return !scalar_mul(smaller, p, E).is_infinity();
}

std::vector<Point> two_torsion(const CurveParams& params) {
  return {Point(QuadElem(Rational(params.root_pos())), QuadElem(0)), Point(QuadElem(0), QuadElem(0)),
          Point(QuadElem(Rational(params.root_neg())), QuadElem(0))};
}

}  // namespace

ThreeTorsionProbe probe_three_torsion(const Curve& E, const FieldDesc& K) {
  ThreeTorsionProbe probe;
  const PolyQ division = psi3(E);
  probe.psi3_roots = roots_in_quadratic_field(division, K);
  for (const QuadElem& x0 : probe.psi3_roots) {
    const auto y = sqrt_in_field(E.rhs(x0), K);
    if (!y) {
      probe.root_only_disagrees = true;
      continue;
    }
    const Point candidate(x0, *y);
    if (!probe.point && has_exact_order(candidate, 3, E)) probe.point = candidate;
  }
  return probe;
}

std::optional<Point> three_torsion_in_K(const Curve& E, const FieldDesc& K) { return probe_three_torsion(E, K).point; }

std::vector<Point> halve_point(const Point& target, const CurveParams& params, const FieldDesc& K) {
  if (target.is_infinity()) throw std::invalid_argument("halve_point needs an affine target");
  const Curve E = build_curve(params);
  const std::array<Integer, 3> roots{Integer(0), params.root_neg(), params.root_pos()};
  std::array<QuadElem, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    auto root = sqrt_in_field(target.x() - QuadElem(Rational(roots[i])), K);
    if (!root) return {};
    r[i] = *root;
  }
  std::vector<Point> halves;
  for (const auto& [s2, s3] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
    const QuadElem r2 = s2 > 0 ? r[1] : -r[1];
    const QuadElem r3 = s3 > 0 ? r[2] : -r[2];
    const QuadElem x = target.x() + r[0] * r2 + r[0] * r3 + r2 * r3;
    const auto y = sqrt_in_field(E.rhs(x), K);
    if (!y) continue;
    for (const QuadElem& ys : {*y, -*y}) {
      Point p(x.lift(K), ys.lift(K));
      if (std::find(halves.begin(), halves.end(), p) != halves.end()) continue;
      if (ell_add_unchecked(p, p, E) == target) halves.push_back(std::move(p));
    }
  }
  return halves;
}

FourTorsionProbe probe_four_torsion(const CurveParams& params, const FieldDesc& K) {
  FourTorsionProbe probe;
  const Integer criterion = 2 * params.r() * (params.r() - params.s());
  probe.square_criterion = sqrt_in_field(QuadElem(Rational(criterion)), K).has_value();
  // The square criterion is necessary for a K-rational halving of (e, 0); it
  // is not sufficient, so the halving itself decides.
  if (!probe.square_criterion) return probe;
  const Curve E = build_curve(params);
  for (const Point& t : two_torsion(params)) {
    for (const Point& p : halve_point(t, params, K)) {
      if (has_exact_order(p, 4, E)) {
        probe.point = p;
        return probe;
      }
    }
  }
  return probe;
}

std::optional<Point> four_torsion_in_K(const CurveParams& params, const FieldDesc& K) {
  return probe_four_torsion(params, K).point;
}

std::string to_string(TorsionGroup g) {
  switch (g) {
    case TorsionGroup::Z2xZ2: return "Z2xZ2";
    case TorsionGroup::Z2xZ4: return "Z2xZ4";
    case TorsionGroup::Z2xZ6: return "Z2xZ6";
    case TorsionGroup::Z2xZ8: return "Z2xZ8";
    case TorsionGroup::Z2xZ12: return "Z2xZ12";
  }
  return "?";
}

TorsionReport torsion_subgroup(const CurveParams& params, const FieldDesc& K) {
  TorsionReport report;
  const Curve E = build_curve(params);
  report.three = probe_three_torsion(E, K);
  report.four = probe_four_torsion(params, K);
  std::optional<Point> eight;
  if (report.four.point) {
    for (const Point& t : two_torsion(params)) {
      for (const Point& quarter : halve_point(t, params, K)) {
        for (const Point& p : halve_point(quarter, params, K)) {
          if (has_exact_order(p, 8, E)) {
            eight = p;
            break;
          }
        }
        if (eight) break;
      }
      if (eight) break;
    }
  }
  const bool has3 = report.three.point.has_value();
  const bool has4 = report.four.point.has_value();
  if (has3) report.witnesses.push_back(*report.three.point);
  if (has4) report.witnesses.push_back(*report.four.point);
  if (eight) report.witnesses.push_back(*eight);

  if (eight && has3) throw std::logic_error("points of order 3 and 8 together exceed every quadratic torsion bound");
  if (eight) {
    report.group = TorsionGroup::Z2xZ8;
  } else if (has4 && has3) {
    report.group = TorsionGroup::Z2xZ12;
  } else if (has4) {
    report.group = TorsionGroup::Z2xZ4;
  } else if (has3) {
    report.group = TorsionGroup::Z2xZ6;
  }
  // Over Q, Mazur's list with full 2-torsion is exactly the four groups the
  // probes separate. Over a quadratic field Z/2 x Z/10 is never probed, so
  // the answer is complete only once 3- or 4-torsion pins the group.
  report.complete = K.is_rational() || has3 || has4;
  return report;
}

}  // namespace theta
