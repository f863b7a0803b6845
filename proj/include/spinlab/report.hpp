// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinlab {

/// Library version written into every report. The report layout itself is
/// schema v1 (keys: suite, params, checks, eigenvalues, seed, version, wall_time_ms, pass).
inline constexpr const char* kVersion = "1.0.0";

struct Check {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass = false;

  bool operator==(const Check& other) const;
};

struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<double> eigenvalues;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  double wall_time_ms = 0;

  /// Conjunction of the check flags; a report without checks does not pass.
  bool pass() const;

  /// pass = value < threshold (false for NaN).
  void add_below(const std::string& name, double value, double threshold);
  /// pass = value > threshold.
  void add_above(const std::string& name, double value, double threshold);
  void add(const std::string& name, double value, double threshold, bool pass);

  /// Appends the checks of `other` with names prefixed by "<prefix>/".
  void merge(const VerificationReport& other, const std::string& prefix);

  bool operator==(const VerificationReport& other) const;
};

enum class ReportFormat { Json, Csv };

ReportFormat report_format_from_string(const std::string& name);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& doc);
/// Parses emitted JSON text, keeping the key order of params.
VerificationReport parse_report(const std::string& text);

std::string to_csv(const VerificationReport& report);
std::string emit_string(const VerificationReport& report, ReportFormat format);
/// Throws Error(Io) when the path cannot be written.
void emit(const VerificationReport& report, ReportFormat format, const std::string& path);

/// Human-readable table, one line per check.
std::string summary(const VerificationReport& report);

/// Two-column ASCII "index eigenvalue" data.
void write_spectrum_dump(const std::vector<double>& eigenvalues, const std::string& path);

}  // namespace spinlab
