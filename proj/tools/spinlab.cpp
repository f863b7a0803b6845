// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

// spinlab run --suite <name> --n <int> --kind <euclidean-ball|hyperbolic-ball> --radius <f>
//             [--alpha <f>] [--modes <int>] [--tol <f>] [--seed <int>] --out <path>
//             [--format json|csv] [--dump-spectrum <path>] [--config <file>]
//
// Exit status: 0 all checks pass, 1 numerical failure, 2 usage or I/O error.

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "spinlab/error.hpp"
#include "spinlab/report.hpp"
#include "spinlab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spinlab: numerical experiments for Dirac operators on model domains"};
  app.require_subcommand(1);
  app.footer(spinlab::suite_help());

  CLI::App* run = app.add_subcommand("run", "Run a verification suite and write its report");
  run->footer(spinlab::suite_help());

  // Options are captured as text so that flags and config files share one parser.
  const std::vector<std::pair<std::string, std::string>> specs = {
      {"suite", "Suite name (see below)"},
      {"n", "Dimension of the model domain"},
      {"kind", "euclidean-ball or hyperbolic-ball"},
      {"radius", "Euclidean radius, or geodesic radius on the hyperbolic ball"},
      {"alpha", "coth of the geodesic radius (psi-pm)"},
      {"modes", "Boundary resolution: Fourier modes (n = 2) or theta nodes (n = 3)"},
      {"tol", "Threshold override for residual checks"},
      {"seed", "Seed for every randomized field"},
      {"out", "Report path"},
      {"format", "json (default) or csv"},
      {"dump-spectrum", "Write 'index eigenvalue' lines to this path"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& [name, help] : specs) options[name] = run->add_option("--" + name, values[name], help);
  std::string config_path;
  run->add_option("--config", config_path, "Config file (JSON object or key = value lines); flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  spinlab::ExperimentConfig config;
  try {
    if (!config_path.empty())
      for (const auto& [key, value] : spinlab::read_config_file(config_path)) spinlab::apply_setting(config, key, value);
    for (const auto& [name, help] : specs)
      if (options[name]->count() > 0) spinlab::apply_setting(config, name, values[name]);
  } catch (const spinlab::Error& e) {
    std::cerr << "spinlab: " << e.what() << "\n";
    return 2;
  }
  return spinlab::run_and_emit(std::move(config), std::cerr);
}
