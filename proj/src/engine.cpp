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

#include "theta/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "theta/quartic.hpp"

namespace theta {
namespace {

std::string bounds_text(const SearchConfig& cfg) {
  return "e <= " + std::to_string(cfg.denom_bound) + ", |m| <= " + std::to_string(cfg.numer_bound);
}

// Affine points of infinite order, in search order.
std::vector<Point> non_torsion(const std::vector<Point>& points, const Curve& E, const FieldDesc& K) {
  std::vector<Point> out;
  for (const Point& p : points) {
    if (p.y().is_zero()) continue;
    if (certify_non_torsion(p, E, K)) out.push_back(p);
  }
  return out;
}

bool by_height(const Point& a, const Point& b) {
  return naive_height(a.x().a()) < naive_height(b.x().a());
}

Point lift_point(const Point& p, const FieldDesc& K) {
  if (p.is_infinity()) return p;
  return Point(p.x().lift(K), p.y().lift(K));
}

// Every combination sum c_i G_i with c_i in [-bound, bound].
std::vector<Point> combinations(const std::vector<Point>& gens, const Curve& E, int bound) {
  std::vector<Point> sums{Point::infinity()};
  for (const Point& g : gens) {
    std::vector<Point> multiples;
    for (int c = -bound; c <= bound; ++c) multiples.push_back(scalar_mul(static_cast<long>(c), g, E));
    std::vector<Point> next;
    next.reserve(sums.size() * multiples.size());
    for (const Point& s : sums)
      for (const Point& m : multiples) next.push_back(ell_add_unchecked(s, m, E));
    sums = std::move(next);
  }
  return sums;
}

// O and the 2-torsion points with coordinates in the field of E.
std::vector<Point> two_torsion(const Curve& E) {
  std::vector<Point> out{Point::infinity(), Point(QuadElem(0).lift(E.field()), QuadElem(0).lift(E.field()))};
  if (!E.defined_over_q()) return out;
  const PolyQ quadratic({E.B().a(), E.A().a(), Rational(1)});
  for (const Rational& e : rational_roots_robust(quadratic)) out.emplace_back(QuadElem(e), QuadElem(0));
  return out;
}

std::vector<Point> translates(const std::vector<Point>& points, const std::vector<Point>& torsion, const Curve& E) {
  std::vector<Point> out;
  out.reserve(points.size() * torsion.size());
  for (const Point& p : points)
    for (const Point& t : torsion) out.push_back(ell_add_unchecked(p, t, E));
  return out;
}

}  // namespace

std::string to_string(VerdictStatus v) {
  switch (v) {
    case VerdictStatus::ProperlyCongruent: return "ProperlyCongruent";
    case VerdictStatus::TorsionOnlyCongruent: return "TorsionOnlyCongruent";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<Point> screen_independent(const std::vector<Point>& candidates, const Curve& E,
                                      std::size_t max_generators) {
  constexpr int kPairBound = 5;
  constexpr int kJointBound = 2;
  const std::vector<Point> torsion = two_torsion(E);
  std::vector<Point> kept;
  std::vector<std::vector<Point>> kept_multiples;  // c G for c in [-5, 5]
  for (const Point& p : candidates) {
    if (kept.size() >= max_generators) break;
    std::vector<Point> p_multiples;
    for (int c = -kPairBound; c <= kPairBound; ++c) p_multiples.push_back(scalar_mul(static_cast<long>(c), p, E));
    bool dependent = false;
    // a P + b G = T  <=>  a P = (-b) G + T; the multiples lists are symmetric.
    for (const auto& g_multiples : kept_multiples) {
      for (int a = -kPairBound; a <= kPairBound && !dependent; ++a) {
        for (int b = -kPairBound; b <= kPairBound && !dependent; ++b) {
          if (a == 0 && b == 0) continue;
          const Point& lhs = p_multiples[static_cast<std::size_t>(a + kPairBound)];
          const Point& g = g_multiples[static_cast<std::size_t>(-b + kPairBound)];
          for (const Point& t : torsion) {
            if (lhs == ell_add_unchecked(g, t, E)) {
              dependent = true;
              break;
            }
          }
        }
      }
      if (dependent) break;
    }
    if (!dependent && kept.size() >= 2) {
      const auto sums = translates(combinations(kept, E, kJointBound), torsion, E);
      for (int a = 1; a <= kJointBound && !dependent; ++a) {
        const Point target = p_multiples[static_cast<std::size_t>(-a + kPairBound)];
        dependent = std::find(sums.begin(), sums.end(), target) != sums.end();
      }
    }
    if (dependent) continue;
    kept.push_back(p);
    kept_multiples.push_back(std::move(p_multiples));
  }
  return kept;
}

Verdict classify(const CurveParams& params, const FieldDesc& K, const SearchConfig& cfg) {
  Verdict verdict;
  auto& log = verdict.evidence;
  const Curve E = build_curve(params);
  log.push_back("curve " + E.to_string() + " over " + K.to_string());

  const TorsionReport torsion = torsion_subgroup(params, K);
  log.push_back("torsion " + to_string(torsion.group) + (torsion.complete ? " (complete)" : " (lower bound)"));
  std::optional<Point> torsion_witness;
  for (const Point& w : torsion.witnesses) {
    if (!w.y().is_zero()) {
      torsion_witness = w;
      break;
    }
  }

  auto base_found = non_torsion(search_points(E, cfg), E, K);
  std::stable_sort(base_found.begin(), base_found.end(), by_height);
  log.push_back("search on E(Q), " + bounds_text(cfg) + ": " + std::to_string(base_found.size()) +
                " non-torsion point(s)");
  // Over Q(sqrt d) transported twist points come first, lowest height first.
  std::vector<Point> candidates;
  if (!K.is_rational()) {
    const Integer& d = K.d();
    const Curve twisted = quadratic_twist(E, d);
    auto twist_found = non_torsion(search_points(twisted, cfg), twisted, FieldDesc::rationals());
    log.push_back("search on twist " + twisted.to_string() + ", " + bounds_text(cfg) + ": " +
                  std::to_string(twist_found.size()) + " non-torsion point(s)");
    std::stable_sort(twist_found.begin(), twist_found.end(), by_height);
    for (const Point& p : twist_found) candidates.push_back(transport_twist_point(p, twisted, d));
  }
  candidates.insert(candidates.end(), base_found.begin(), base_found.end());

  if (!candidates.empty()) {
    const Point witness = lift_point(candidates.front(), K);
    if (!certify_non_torsion(witness, E, K)) throw std::logic_error("witness lost its non-torsion certificate");
    verdict.status = VerdictStatus::ProperlyCongruent;
    verdict.witness_point = witness;
    verdict.witness_triangle = psi_point_to_triangle(witness, params, K);
    log.push_back("non-torsion witness " + witness.to_string() + " gives triangle " +
                  verdict.witness_triangle->to_string());
    return verdict;
  }
  if (torsion_witness) {
    verdict.status = VerdictStatus::TorsionOnlyCongruent;
    verdict.witness_point = lift_point(*torsion_witness, K);
    verdict.witness_triangle = psi_point_to_triangle(*verdict.witness_point, params, K);
    log.push_back("torsion witness " + verdict.witness_point->to_string() + " gives triangle " +
                  verdict.witness_triangle->to_string());
    log.push_back("no non-torsion point within the bounds; positive rank is not excluded");
    return verdict;
  }
  log.push_back("no witness within the bounds; this does not show non-congruence");
  return verdict;
}

RankEvidence twist_rank_evidence(const CurveParams& params, const Integer& d, const SearchConfig& cfg) {
  if (d < 2 || !is_square_free(d)) throw std::invalid_argument("twist parameter must be square-free and >= 2");
  RankEvidence ev;
  ev.d = d;
  const FieldDesc Q = FieldDesc::rationals();
  const Curve E = build_curve(params);
  const Curve twisted = quadratic_twist(E, d);
  ev.base_points = non_torsion(search_points(E, cfg), E, Q);
  ev.twist_points = non_torsion(search_points(twisted, cfg), twisted, Q);
  for (const Point& p : ev.twist_points) ev.transported.push_back(transport_twist_point(p, twisted, d));
  ev.base_generators = screen_independent(ev.base_points, E);
  ev.twist_generators = screen_independent(ev.twist_points, twisted);
  ev.lower_bound_hint = static_cast<int>(ev.base_generators.size() + ev.twist_generators.size());
  ev.notes.push_back("E: " + E.to_string() + ", " + std::to_string(ev.base_points.size()) +
                     " non-torsion point(s) within " + bounds_text(cfg));
  ev.notes.push_back("E^d: " + twisted.to_string() + ", " + std::to_string(ev.twist_points.size()) +
                     " non-torsion point(s) within " + bounds_text(cfg));
  ev.notes.push_back("rank(E(Q(sqrt d))) = rank(E(Q)) + rank(E^d(Q)); search supports only lower bounds");
  return ev;
}

RankEvidence twist_rank_evidence(const CurveParams& params, const SearchConfig& cfg) {
  if (!cfg.twist_d) throw std::invalid_argument("twist_rank_evidence: no twist parameter configured");
  return twist_rank_evidence(params, Integer(*cfg.twist_d), cfg);
}

std::optional<TriangleK> oracle_triangle_search(const CurveParams& params, const FieldDesc& K, long height) {
  if (height < 1) throw std::invalid_argument("oracle height must be >= 1");
  const QuadElem two_nr{Rational(2 * params.n() * params.r())};
  const QuadElem two_cos{Rational(2 * params.theta().cosine())};
  for (long b = 1; b <= height; ++b) {
    for (long a = 1; a <= height; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational ratio = make_rational(Integer(a), Integer(b));
      std::vector<QuadElem> legs{QuadElem(ratio).lift(K)};
      if (!K.is_rational()) legs.emplace_back(0, ratio, K);
      for (const QuadElem& u : legs) {
        const QuadElem v = two_nr / u;
        const QuadElem w_sq = u * u + v * v - two_cos * u * v;
        const auto w = sqrt_in_field(w_sq, K);
        if (!w || w->is_zero()) continue;
        TriangleK t(u, v.lift(K), w->lift(K), params, K);
        if (verify_triangle(t)) return t;
      }
    }
  }
  return std::nullopt;
}

}  // namespace theta
