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

// Request dispatch and exact JSON reports for the command-line tool.
//
// Exact numbers are strings: rationals as "num/den", elements of Q(sqrt d) as
// ["a", "b"] for a + b sqrt(d), polynomials as ascending coefficient lists.
// Objects serialize with sorted keys, so identical requests give identical
// bytes.

#ifndef THETA_REPORT_HPP_
#define THETA_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "theta/engine.hpp"
#include "theta/quartic.hpp"

namespace theta {

using Json = nlohmann::json;

enum class Command {
  Curve,
  Torsion,
  Classify,
  TriangleFromPoint,
  PointFromTriangle,
  Quartic,
  Oracle,
  TwistEvidence,
  VerifyPaper,
};
std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);
const std::vector<std::string>& command_names();

enum class OutputFormat { Json, Text };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitVerifyFailed = 3;

struct CliRequest {
  Command command = Command::VerifyPaper;
  std::optional<std::string> n;
  std::optional<std::string> theta;  // "s/r"
  std::optional<std::string> d;
  std::optional<std::string> r;
  std::optional<std::string> s;
  // Field elements as "a" or "a,b" meaning a + b sqrt(d).
  std::optional<std::string> x, y, u, v, w;
  std::optional<long> denom_bound;
  std::optional<long> numer_bound;
  std::optional<long> height;  // oracle search height, default 10
  OutputFormat output = OutputFormat::Json;
};

struct CliReport {
  Json request;
  Json result;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
};

CliReport run_cli(const CliRequest& req);
CliReport verify_paper();

std::string render_json(const CliReport& report);
std::string render_text(const CliReport& report);
// Inverse of render_json.
CliReport parse_report(const std::string& text);

// Exact encoders.
Json to_json(const Rational& q);
Json to_json(const QuadElem& x);
Json to_json(const Point& p);
Json to_json(const PolyQ& p);
Json to_json(const Curve& E);
Json to_json(const TriangleK& t);
Json to_json(const TorsionReport& t);
Json to_json(const Verdict& v);
Json to_json(const QuarticReport& q);
Json to_json(const RankEvidence& ev);

// Parses "a" or "a,b" into a + b sqrt(d) in K; b must be 0 over Q.
QuadElem parse_field_element(const std::string& text, const FieldDesc& K);

}  // namespace theta

#endif  // THETA_REPORT_HPP_
