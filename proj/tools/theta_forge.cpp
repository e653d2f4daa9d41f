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

// theta-forge: exact tools for theta-congruent numbers over Q and Q(sqrt d).

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "theta/report.hpp"

namespace {

void add_common(CLI::App* sub, theta::CliRequest& req, bool curve, bool field) {
  if (curve) {
    sub->add_option("--n", req.n, "square-free positive integer");
    sub->add_option("--theta", req.theta, "cos(theta) as s/r, e.g. 1/2, 0, -1/2");
  }
  if (field) sub->add_option("--d", req.d, "radicand of the real quadratic field");
}

void add_bounds(CLI::App* sub, theta::CliRequest& req) {
  sub->add_option("--denom-bound", req.denom_bound, "largest e in x = m/e^2");
  sub->add_option("--numer-bound", req.numer_bound, "largest |m| in x = m/e^2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for theta-congruent numbers over Q and real quadratic fields"};
  app.require_subcommand(1);
  theta::CliRequest req;
  std::string output = "json";
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::map<CLI::App*, theta::Command> commands;
  auto make = [&](theta::Command c, const std::string& help) {
    CLI::App* sub = app.add_subcommand(theta::to_string(c), help);
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    commands[sub] = c;
    return sub;
  };

  auto* curve = make(theta::Command::Curve, "build E_{n,theta}");
  add_common(curve, req, true, true);

  auto* torsion = make(theta::Command::Torsion, "torsion subgroup over K");
  add_common(torsion, req, true, true);

  auto* classify = make(theta::Command::Classify, "search for a congruence witness over K");
  add_common(classify, req, true, true);
  add_bounds(classify, req);

  auto* t_from_p = make(theta::Command::TriangleFromPoint, "triangle attached to a point");
  add_common(t_from_p, req, true, true);
  t_from_p->add_option("--x", req.x, "x as a or a,b for a + b sqrt(d)");
  t_from_p->add_option("--y", req.y, "y as a or a,b");

  auto* p_from_t = make(theta::Command::PointFromTriangle, "point attached to a triangle");
  add_common(p_from_t, req, true, true);
  p_from_t->add_option("--u", req.u, "leg u as a or a,b");
  p_from_t->add_option("--v", req.v, "leg v as a or a,b");
  p_from_t->add_option("--w", req.w, "side opposite theta as a or a,b");

  auto* quartic = make(theta::Command::Quartic, "the quartic f_{r,s} and its Galois analysis");
  quartic->add_option("--r", req.r, "r in cos(theta) = s/r");
  quartic->add_option("--s", req.s, "s in cos(theta) = s/r");
  quartic->add_option("--theta", req.theta, "cos(theta) as s/r, instead of --r/--s");

  auto* oracle = make(theta::Command::Oracle, "direct triangle enumeration");
  add_common(oracle, req, true, true);
  oracle->add_option("--height", req.height, "numerator and denominator bound for the leg");

  auto* twist = make(theta::Command::TwistEvidence, "points on E and its twist by d");
  add_common(twist, req, true, true);
  add_bounds(twist, req);

  make(theta::Command::VerifyPaper, "replay the four worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : theta::kExitInputError;
  }
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) req.command = command;
  req.output = output == "text" ? theta::OutputFormat::Text : theta::OutputFormat::Json;

  const theta::CliReport report = theta::run_cli(req);
  std::cout << (req.output == theta::OutputFormat::Json ? theta::render_json(report) : theta::render_text(report));
  return report.exit_code;
}
