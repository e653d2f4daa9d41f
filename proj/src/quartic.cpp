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

#include "theta/quartic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace theta {
namespace {

// Strips the factor x^k from an integer coefficient vector; reports whether
// 0 was a root.
bool strip_zero_root(std::vector<Integer>& c) {
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  c.erase(c.begin(), c.begin() + static_cast<long>(k));
  return k > 0;
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int sign_changes(const std::vector<PolyQ>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<QuadElem> solve_quadratic(const PolyQ& q, const FieldDesc& K) {
  const Rational a = q.coeff(2);
  const Rational b = q.coeff(1);
  const Rational c = q.coeff(0);
  const Rational disc = b * b - 4 * a * c;
  const auto root = sqrt_in_field(QuadElem(disc), K);
  if (!root) return {};
  const QuadElem minus_b = QuadElem(Rational(-b)).lift(K);
  const QuadElem two_a = QuadElem(Rational(2 * a));
  if (root->is_zero()) return {minus_b / two_a};
  return {(minus_b + *root) / two_a, (minus_b - *root) / two_a};
}

}  // namespace

PolyQ build_f_quartic(const ThetaSlope& theta) {
  const Integer& r = theta.r();
  const Integer& s = theta.s();
  const Integer m = 3 * r * r + s * s;
  return PolyQ(std::vector<Rational>{Rational(-3 * m * m), Rational(8 * s * (9 * r * r - s * s)),
                                     Rational(-6 * m), Rational(0), Rational(1)});
}

PolyQ build_f_quartic(const Integer& r, const Integer& s) { return build_f_quartic(ThetaSlope(r, s)); }

std::vector<Rational> rational_roots(const PolyQ& p, unsigned long bound) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Integer> c = primitive_integer_coeffs(p);
  std::vector<Rational> roots;
  if (strip_zero_root(c)) roots.emplace_back(0);
  if (c.size() <= 1) return roots;

  const std::vector<Integer> numerators = divisors(abs(c.front()), bound);
  const std::vector<Integer> denominators = divisors(abs(c.back()), bound);
  const std::size_t n = c.size() - 1;
  for (const Integer& b : denominators) {
    for (const Integer& a : numerators) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      for (const Integer& signed_a : {a, Integer(-a)}) {
        // sum c_i a^i b^(n-i), evaluated by Horner on the homogenized form
        Integer acc = 0;
        Integer b_pow = 1;
        for (std::size_t i = 0; i <= n; ++i) {
          acc = acc * signed_a + c[n - i] * b_pow;
          b_pow *= b;
        }
        // Horner above accumulates c_n a^n + c_{n-1} a^{n-1} b + ... + c_0 b^n.
        if (acc == 0) roots.push_back(make_rational(signed_a, b));
      }
    }
  }
  sort_unique(roots);
  return roots;
}

std::vector<Rational> rational_roots_isolated(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Integer> c = primitive_integer_coeffs(p);
  std::vector<Rational> roots;
  if (strip_zero_root(c)) roots.emplace_back(0);
  if (c.size() <= 1) return roots;

  // c_n^(n-1) p(y / c_n) is monic with integer coefficients; its rational
  // roots are integers y, mapping back to x = y / c_n.
  const std::size_t n = c.size() - 1;
  const Integer lead = c.back();
  std::vector<Rational> monic(n + 1);
  Integer bound = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    Integer scale = 1;
    for (std::size_t k = 0; k + 1 + i < n; ++k) scale *= lead;  // lead^(n-1-i)
    monic[i] = i == n ? Rational(1) : Rational(c[i] * scale);
    if (i < n && abs(monic[i].get_num()) > bound) bound = abs(monic[i].get_num());
  }
  const PolyQ g(monic);
  const PolyQ square_free = divmod(g, gcd(g, g.derivative())).first;

  std::vector<PolyQ> chain{square_free, square_free.derivative()};
  while (chain.back().degree() > 0) {
    PolyQ rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }

  const Rational half(1, 2);
  std::function<void(const Rational&, const Rational&)> isolate = [&](const Rational& lo, const Rational& hi) {
    if (sign_changes(chain, lo) - sign_changes(chain, hi) == 0) return;
    const Rational width = hi - lo;
    if (width == 1) {
      const Rational y = lo + half;
      if (sgn(g.eval(y)) == 0) roots.push_back(y / lead);
      return;
    }
    const Integer steps = width.get_num() / 2;
    const Rational mid = lo + Rational(steps);
    isolate(lo, mid);
    isolate(mid, hi);
  };
  // Cauchy bound: every root has |y| < 1 + max |coeff|.
  isolate(Rational(-bound - 1) - half, Rational(bound + 1) + half);
  sort_unique(roots);
  return roots;
}

std::vector<Rational> rational_roots_robust(const PolyQ& p) {
  try {
    return rational_roots(p);
  } catch (const FactorizationError&) {
    return rational_roots_isolated(p);
  }
}

std::string to_string(GaloisType g) {
  switch (g) {
    case GaloisType::S4: return "S4";
    case GaloisType::A4: return "A4";
    case GaloisType::D4: return "D4";
    case GaloisType::C4: return "C4";
    case GaloisType::V4: return "V4";
    case GaloisType::Reducible: return "Reducible";
  }
  return "?";
}

std::string to_string(CubicObstruction c) {
  return c == CubicObstruction::ObstructionProven ? "ObstructionProven" : "Inconclusive";
}

namespace {

struct Depressed {
  PolyQ poly;  // y^4 + P y^2 + Q y + C
  Rational shift;  // x = y + shift
  Rational P, Q, C;
};

Depressed depress(const PolyQ& p) {
  const PolyQ m = p.monic();
  const Rational h = -m.coeff(3) / 4;
  PolyQ dep = m.shift(h);
  return {dep, h, dep.coeff(2), dep.coeff(1), dep.coeff(0)};
}

PolyQ resolvent_of(const Depressed& d) {
  return PolyQ(std::vector<Rational>{Rational(4 * d.P * d.C - d.Q * d.Q), Rational(-4 * d.C), Rational(-d.P),
                                     Rational(1)});
}

// Does a z^2 + b z + c split over Q(sqrt(D))? Works for D of either sign.
bool splits_over_quadratic(const PolyQ& quad, const Rational& D) {
  const Rational b = quad.coeff(1);
  const Rational disc = b * b - 4 * quad.coeff(2) * quad.coeff(0);
  const auto sf = square_free_decompose(D.get_num() * D.get_den());
  if (sf.core > 1) {
    return !roots_in_quadratic_field(quad, FieldDesc::real_quadratic(sf.core)).empty();
  }
  // Imaginary Q(sqrt(D)): disc must be a rational square or D times one.
  return is_square_rational(disc).has_value() || is_square_rational(disc / D).has_value();
}

}  // namespace

Rational quartic_discriminant(const PolyQ& p) {
  if (p.degree() != 4) throw std::invalid_argument("quartic_discriminant needs degree 4, got " + p.to_string());
  const Depressed d = depress(p);
  const Rational &P = d.P, &Q = d.Q, &C = d.C;
  const Rational monic_disc = 256 * C * C * C - 128 * P * P * C * C + 144 * P * Q * Q * C - 27 * Q * Q * Q * Q +
                              16 * P * P * P * P * C - 4 * P * P * P * Q * Q;
  const Rational lead = p.leading();
  return monic_disc * lead * lead * lead * lead * lead * lead;
}

std::optional<std::pair<PolyQ, PolyQ>> split_into_quadratics(const PolyQ& p) {
  if (p.degree() != 4) return std::nullopt;
  const Depressed d = depress(p);
  for (const Rational& t : rational_roots_robust(resolvent_of(d))) {
    const auto u = is_square_rational(t - d.P);
    if (!u) continue;
    Rational v, w;
    if (sgn(*u) != 0) {
      v = (t - d.Q / *u) / 2;
      w = (t + d.Q / *u) / 2;
    } else {
      if (sgn(d.Q) != 0) continue;
      const auto root = is_square_rational(t * t - 4 * d.C);
      if (!root) continue;
      v = (t - *root) / 2;
      w = (t + *root) / 2;
    }
    if (v * w != d.C) continue;
    const PolyQ f1(std::vector<Rational>{v, *u, Rational(1)});
    const PolyQ f2(std::vector<Rational>{w, Rational(-*u), Rational(1)});
    // y = x - shift
    std::pair<PolyQ, PolyQ> out{p.leading() * f1.shift(-d.shift), f2.shift(-d.shift)};
    if (out.first * out.second != p) throw std::logic_error("quadratic split does not reproduce " + p.to_string());
    return out;
  }
  return std::nullopt;
}

QuarticReport quartic_analyze(const PolyQ& p) {
  if (p.degree() != 4) throw std::invalid_argument("quartic_analyze needs degree 4, got " + p.to_string());
  QuarticReport report;
  report.discriminant = quartic_discriminant(p);
  if (sgn(report.discriminant) == 0) throw std::invalid_argument("quartic has repeated roots: " + p.to_string());
  const Depressed d = depress(p);
  report.depressed = d.poly;
  report.resolvent = resolvent_of(d);
  report.rational_roots = rational_roots_robust(p);
  if (report.rational_roots.empty()) report.quadratic_split = split_into_quadratics(p);
  report.irreducible_over_q = report.rational_roots.empty() && !report.quadratic_split;
  if (!report.irreducible_over_q) {
    report.galois_type = GaloisType::Reducible;
    return report;
  }

  const bool disc_square = is_square_rational(report.discriminant).has_value();
  const auto resolvent_roots = rational_roots_robust(report.resolvent);
  if (resolvent_roots.empty()) {
    report.galois_type = disc_square ? GaloisType::A4 : GaloisType::S4;
  } else if (resolvent_roots.size() >= 2) {
    report.galois_type = GaloisType::V4;
  } else {
    // Exactly one rational resolvent root t: C4 iff z^2 - t z + C and
    // z^2 + (P - t) both split over Q(sqrt(disc)).
    const Rational& t = resolvent_roots.front();
    const PolyQ g1(std::vector<Rational>{d.C, Rational(-t), Rational(1)});
    const PolyQ g2(std::vector<Rational>{Rational(d.P - t), Rational(0), Rational(1)});
    const bool cyclic = splits_over_quadratic(g1, report.discriminant) && splits_over_quadratic(g2, report.discriminant);
    report.galois_type = cyclic ? GaloisType::C4 : GaloisType::D4;
  }
  return report;
}

ModSRootAnalysis mod_s_root_analysis(const ThetaSlope& theta) {
  if (theta.s() == 0) throw std::invalid_argument("mod_s_root_analysis needs s != 0");
  const Integer modulus = abs(theta.s());
  ModSRootAnalysis out;
  for (const auto& [prime, exponent] : factor_smooth(modulus)) {
    if (prime < 5) continue;
    if (!qr_mod_p(3, prime)) {
      out.qr3_holds = false;
      out.failing_primes.push_back(prime);
    }
  }
  if (modulus <= kResidueEnumerationCap) {
    const long m = modulus.get_si();
    const Integer r_mod = theta.r() % modulus;
    const long r = r_mod.get_si();
    const long r2 = (r * r) % m;
    const long r4 = (r2 * r2) % m;
    bool found = false;
    for (long k = 0; k < m && !found; ++k) {
      const long k2 = (k * k) % m;
      const long value = ((k2 * k2) % m - (18 * r2 % m) * k2 % m - (27 * r4) % m) % m;
      found = (value + 2 * m) % m == 0;
    }
    out.residue_roots_exist = found;
  }
  return out;
}

std::vector<QuadElem> roots_in_quadratic_field(const PolyQ& p, const FieldDesc& K) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (p.degree() > 4) throw std::invalid_argument("roots_in_quadratic_field handles degree <= 4");
  std::vector<QuadElem> out;
  PolyQ rest = p;
  for (const Rational& root : rational_roots_robust(p)) {
    out.push_back(QuadElem(root).lift(K));
    const PolyQ linear = PolyQ::linear_root(root);
    for (;;) {
      auto [quot, rem] = divmod(rest, linear);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
    }
  }
  if (K.is_rational()) return out;
  // rest has no rational roots: an irreducible cubic or quartic has no root
  // in a quadratic field, so only quadratic factors contribute.
  std::vector<PolyQ> quadratics;
  if (rest.degree() == 2) {
    quadratics.push_back(rest);
  } else if (rest.degree() == 4) {
    if (auto split = split_into_quadratics(rest)) {
      quadratics.push_back(split->first);
      quadratics.push_back(split->second);
    }
  }
  for (const auto& q : quadratics) {
    for (auto& root : solve_quadratic(q, K)) {
      if (std::find(out.begin(), out.end(), root) == out.end()) out.push_back(std::move(root));
    }
  }
  return out;
}

CubicObstruction cubic_field_obstruction(const ThetaSlope& theta) {
  return rational_roots(build_f_quartic(theta)).empty() ? CubicObstruction::ObstructionProven
                                                         : CubicObstruction::Inconclusive;
}

}  // namespace theta
