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

#include "theta/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <iterator>
#include <thread>
#include <tuple>

namespace theta {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

struct Hit {
  long e;
  long m;
  Integer k;  // y = k / e^3, k >= 0
};

// Residue filters for perfect squares mod 64, 63, 65 and 11.
struct SquareFilter {
  std::vector<bool> mod64, mod63, mod65, mod11;
  SquareFilter() : mod64(64), mod63(63), mod65(65), mod11(11) {
    for (unsigned i = 0; i < 64; ++i) mod64[(i * i) % 64] = true;
    for (unsigned i = 0; i < 63; ++i) mod63[(i * i) % 63] = true;
    for (unsigned i = 0; i < 65; ++i) mod65[(i * i) % 65] = true;
    for (unsigned i = 0; i < 11; ++i) mod11[(i * i) % 11] = true;
  }
};

const SquareFilter& square_filter() {
  static const SquareFilter filter;
  return filter;
}

std::optional<u128> isqrt_exact(u128 v) {
  const auto& f = square_filter();
  if (!f.mod64[static_cast<unsigned>(v % 64)] || !f.mod63[static_cast<unsigned>(v % 63)] ||
      !f.mod65[static_cast<unsigned>(v % 65)] || !f.mod11[static_cast<unsigned>(v % 11)])
    return std::nullopt;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

Integer to_integer(u128 v) {
  const auto hi = static_cast<unsigned long>(v >> 64);
  const auto lo = static_cast<unsigned long>(v);
  Integer out = hi;
  out <<= 64;
  out += lo;
  return out;
}

long mod_nonneg(long a, long p) {
  const long r = a % p;
  return r < 0 ? r + p : r;
}

// For each sieve prime p, ok[p][m mod p] says whether the cubic value can be a
// square mod p at this e.
std::vector<std::vector<char>> sieve_tables(const SearchConfig& cfg, const Integer& A, const Integer& B, long e) {
  std::vector<std::vector<char>> tables;
  for (long p : cfg.sieve_primes) {
    std::vector<char> is_square(static_cast<std::size_t>(p), 0);
    for (long i = 0; i < p; ++i) is_square[static_cast<std::size_t>((i * i) % p)] = 1;
    const long a = mod_nonneg(Integer(A % p).get_si(), p);
    const long b = mod_nonneg(Integer(B % p).get_si(), p);
    const long e2 = (e % p) * (e % p) % p;
    const long e4 = e2 * e2 % p;
    std::vector<char> ok(static_cast<std::size_t>(p), 0);
    for (long m = 0; m < p; ++m) {
      const long value = (m * m % p * m + a * e2 % p * (m * m % p) + b * e4 % p * m) % p;
      ok[static_cast<std::size_t>(m)] = is_square[static_cast<std::size_t>(value)];
    }
    tables.push_back(std::move(ok));
  }
  return tables;
}

void scan_denominator(const SearchConfig& cfg, const Integer& A, const Integer& B, bool fast, long e,
                      std::vector<Hit>& hits) {
  const auto tables = sieve_tables(cfg, A, B, e);
  const std::size_t np = cfg.sieve_primes.size();
  std::vector<long> residue(np);
  const long start = -cfg.numer_bound;
  for (std::size_t j = 0; j < np; ++j) residue[j] = mod_nonneg(start, cfg.sieve_primes[j]);

  const i128 e2 = static_cast<i128>(e) * e;
  const i128 e4 = e2 * e2;
  const i128 a_fast = fast ? static_cast<i128>(A.get_si()) : 0;
  const i128 b_fast = fast ? static_cast<i128>(B.get_si()) : 0;
  const Integer e2_big = Integer(e) * e;
  const Integer e4_big = e2_big * e2_big;

  for (long m = start; m <= cfg.numer_bound; ++m) {
    bool pass = true;
    for (std::size_t j = 0; j < np; ++j) {
      if (pass && tables[j][static_cast<std::size_t>(residue[j])] == 0) pass = false;
      if (++residue[j] == cfg.sieve_primes[j]) residue[j] = 0;
    }
    if (!pass) continue;
    if (e > 1 && std::gcd(m, e) != 1) continue;
    if (fast) {
      const i128 mm = m;
      const i128 value = mm * (mm * mm + a_fast * e2 * mm + b_fast * e4);
      if (value < 0) continue;
      if (auto root = isqrt_exact(static_cast<u128>(value))) hits.push_back({e, m, to_integer(*root)});
    } else {
      const Integer mm = m;
      const Integer value = mm * (mm * mm + A * e2_big * mm + B * e4_big);
      if (auto root = exact_sqrt(value)) hits.push_back({e, m, *root});
    }
  }
}

}  // namespace

void SearchConfig::validate() const {
  if (denom_bound < 1) throw std::invalid_argument("search: denominator bound must be >= 1");
  if (numer_bound < 1) throw std::invalid_argument("search: numerator bound must be >= 1");
  for (long p : sieve_primes)
    if (!is_odd_prime(Integer(p))) throw std::invalid_argument("search: sieve entry " + std::to_string(p) + " is not an odd prime");
}

unsigned search_threads() {
  if (const char* env = std::getenv("THETA_FORGE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Point> search_points(const Curve& E, const SearchConfig& cfg) {
  cfg.validate();
  if (!E.defined_over_q() || E.A().a().get_den() != 1 || E.B().a().get_den() != 1)
    throw std::invalid_argument("search_points needs integer coefficients over Q: " + E.to_string());
  const Integer A = E.A().a().get_num();
  const Integer B = E.B().a().get_num();

  const Integer n = cfg.numer_bound;
  const Integer e = cfg.denom_bound;
  const Integer worst = n * n * n + abs(A) * n * n * e * e + abs(B) * n * e * e * e * e;
  Integer limit = 1;
  limit <<= 125;
  const bool fast = worst < limit && A.fits_slong_p() && B.fits_slong_p();

  const unsigned workers = std::min<unsigned>(search_threads(), static_cast<unsigned>(cfg.denom_bound));
  std::vector<std::vector<Hit>> per_worker(workers);
  auto run = [&](unsigned w) {
    for (long den = 1 + static_cast<long>(w); den <= cfg.denom_bound; den += static_cast<long>(workers))
      scan_denominator(cfg, A, B, fast, den, per_worker[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::vector<Hit> hits;
  for (auto& part : per_worker) std::move(part.begin(), part.end(), std::back_inserter(hits));
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return std::tie(a.e, a.m) < std::tie(b.e, b.m); });

  std::vector<Point> points;
  points.reserve(hits.size());
  for (const Hit& h : hits) {
    const Integer e2 = Integer(h.e) * h.e;
    points.emplace_back(QuadElem(make_rational(Integer(h.m), e2)), QuadElem(make_rational(h.k, e2 * h.e)));
  }
  return points;
}

}  // namespace theta
