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

// Decision procedures for theta-congruence over Q and Q(sqrt(d)).
//
// n is (K, theta)-congruent when E_{n,theta}(K) has a point of order > 2, and
// properly so when E_{n,theta}(K) has positive rank. Search can only ever
// produce witnesses, so Unknown is a first-class answer and nothing here
// asserts non-congruence.

#ifndef THETA_ENGINE_HPP_
#define THETA_ENGINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "theta/curve.hpp"
#include "theta/search.hpp"
#include "theta/torsion.hpp"
#include "theta/triangle.hpp"

namespace theta {

enum class VerdictStatus { ProperlyCongruent, TorsionOnlyCongruent, Unknown };
std::string to_string(VerdictStatus v);

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<Point> witness_point;
  std::optional<TriangleK> witness_triangle;
  std::vector<std::string> evidence;
};

Verdict classify(const CurveParams& params, const FieldDesc& K, const SearchConfig& cfg = {});

struct RankEvidence {
  Integer d;
  std::vector<Point> base_points;   // non-torsion points on E(Q)
  std::vector<Point> twist_points;  // non-torsion points on E^d(Q)
  std::vector<Point> transported;   // images of twist_points on E(Q(sqrt d))
  std::vector<Point> base_generators;
  std::vector<Point> twist_generators;
  // Count of generators surviving the bounded independence screen. A hint,
  // not a rank: only small relations are excluded.
  int lower_bound_hint = 0;
  std::vector<std::string> notes;
};

// Searches E and E^d, certifies non-torsion, screens independence and
// transports the twist points to E(Q(sqrt d)).
RankEvidence twist_rank_evidence(const CurveParams& params, const Integer& d, const SearchConfig& cfg = {});
// Uses cfg.twist_d, which must be set.
RankEvidence twist_rank_evidence(const CurveParams& params, const SearchConfig& cfg);

// Greedy screen over candidates (already certified non-torsion): a candidate
// is kept unless a P + sum b_i G_i is O or a rational 2-torsion point for
// kept generators G_i, with 0 < max(|a|, |b|) <= 5 against a single
// generator, or with all coefficients in [-2, 2] against the whole kept set.
std::vector<Point> screen_independent(const std::vector<Point>& candidates, const Curve& E,
                                      std::size_t max_generators = 6);

// Enumerates legs u = a/b (and u = (a/b) sqrt d over Q(sqrt d)) with
// 1 <= a, b <= height in lowest terms, ordered by (b, a); sets v = 2nr/u and
// accepts when w^2 = u^2 + v^2 - 2uv s/r has a square root in K. Independent
// of the curve machinery.
std::optional<TriangleK> oracle_triangle_search(const CurveParams& params, const FieldDesc& K, long height);

}  // namespace theta

#endif  // THETA_ENGINE_HPP_
