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

#ifndef THETA_PARAMS_HPP_
#define THETA_PARAMS_HPP_

#include <string>

#include "theta/numbers.hpp"

namespace theta {

// An angle in (0, pi) with rational cosine s/r, r > 0, gcd(r, s) = 1.
class ThetaSlope {
 public:
  ThetaSlope(const Integer& r, const Integer& s);

  // "s/r", e.g. "1/2" for pi/3, "-1/2" for 2pi/3, "0/1" (or "0") for pi/2.
  // Non-reduced fractions are reduced.
  static ThetaSlope parse(const std::string& cosine);

  static ThetaSlope pi_over_3() { return ThetaSlope(2, 1); }
  static ThetaSlope pi_over_2() { return ThetaSlope(1, 0); }
  static ThetaSlope two_pi_over_3() { return ThetaSlope(2, -1); }

  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }
  Rational cosine() const { return make_rational(s_, r_); }
  // r^2 - s^2; sin(theta) = sqrt(r^2 - s^2) / r.
  Integer sine_radicand() const { return r_ * r_ - s_ * s_; }

  std::string to_string() const { return s_.get_str() + "/" + r_.get_str(); }
  bool operator==(const ThetaSlope&) const = default;

 private:
  Integer r_;
  Integer s_;
};

// n square-free and positive. n in {1, 2, 3, 6} is flagged exceptional: the
// torsion of E_{n,theta}(Q) may exceed Z/2 x Z/2 there.
class CurveParams {
 public:
  CurveParams(const Integer& n, const ThetaSlope& theta);

  const Integer& n() const { return n_; }
  const ThetaSlope& theta() const { return theta_; }
  const Integer& r() const { return theta_.r(); }
  const Integer& s() const { return theta_.s(); }
  bool exceptional() const { return n_ == 1 || n_ == 2 || n_ == 3 || n_ == 6; }

  // The 2-torsion x-coordinates 0, -(r+s)n, (r-s)n.
  Integer root_neg() const { return -(r() + s()) * n_; }
  Integer root_pos() const { return (r() - s()) * n_; }

  bool operator==(const CurveParams&) const = default;

 private:
  Integer n_;
  ThetaSlope theta_;
};

}  // namespace theta

#endif  // THETA_PARAMS_HPP_
