// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinlab/models.hpp"
#include "spinlab/report.hpp"

namespace spinlab {

struct ExperimentConfig {
  std::string suite;
  int n = 2;
  DomainKind kind = DomainKind::EuclideanBall;
  /// Euclidean radius r, or geodesic radius rho on the hyperbolic ball.
  double radius = 1.0;
  std::optional<double> alpha;
  /// Fourier modes (n = 2) or theta nodes (n = 3) of the boundary basis.
  std::optional<int> modes;
  /// Replaces the default threshold of every residual check.
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string out;
  ReportFormat format = ReportFormat::Json;
  std::string dump_spectrum;

  /// Keys set explicitly (from a file or flags), by canonical name.
  std::set<std::string> given;
};

/// Sets one key from its text form. Keys: suite, n, kind, radius, alpha,
/// modes, tol, seed, out, format, dump-spectrum. Throws Error(Usage).
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Reads a config file: a JSON object, or "key = value" lines ('#' comments).
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Fills suite-implied parameters and rejects incomplete or inconsistent
/// configurations with Error(Usage).
ExperimentConfig validated(ExperimentConfig config);

struct SuiteInfo {
  std::string name;
  std::string parameters;
  std::string description;
};

const std::vector<SuiteInfo>& suites();
std::string suite_help();

struct RunResult {
  VerificationReport report;
  /// Full trusted spectrum for --dump-spectrum (falls back to report eigenvalues).
  std::vector<double> spectrum;
};

/// Runs a validated configuration. Library errors raised inside a suite
/// become a failing "error" check rather than escaping.
RunResult run(const ExperimentConfig& config);

/// Validates, runs, writes the report (and spectrum dump), prints the summary
/// to `err`. Returns 0 on pass, 1 on numerical failure, 2 on usage or I/O errors.
int run_and_emit(ExperimentConfig config, std::ostream& err);

}  // namespace spinlab
