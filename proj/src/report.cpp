// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "spinlab/error.hpp"

namespace spinlab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// NaN and infinities are stored as null by JSON; compare them as equal.
bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

double number_or_nan(const ordered_json& v) {
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

}  // namespace

bool Check::operator==(const Check& other) const {
  return name == other.name && same(value, other.value) && same(threshold, other.threshold) && pass == other.pass;
}

bool VerificationReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add_below(const std::string& name, double value, double threshold) {
  checks.push_back({name, value, threshold, value < threshold});
}

void VerificationReport::add_above(const std::string& name, double value, double threshold) {
  checks.push_back({name, value, threshold, value > threshold});
}

void VerificationReport::add(const std::string& name, double value, double threshold, bool pass) {
  checks.push_back({name, value, threshold, pass});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

bool VerificationReport::operator==(const VerificationReport& other) const {
  if (eigenvalues.size() != other.eigenvalues.size()) return false;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    if (!same(eigenvalues[i], other.eigenvalues[i])) return false;
  return suite == other.suite && params == other.params && checks == other.checks && seed == other.seed &&
         version == other.version && same(wall_time_ms, other.wall_time_ms);
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::Usage, "unknown report format '" + name + "' (json or csv)");
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json doc;
  doc["suite"] = r.suite;
  doc["params"] = r.params;
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.checks)
    doc["checks"].push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
  doc["eigenvalues"] = r.eigenvalues;
  doc["seed"] = r.seed;
  doc["version"] = r.version;
  doc["wall_time_ms"] = r.wall_time_ms;
  doc["pass"] = r.pass();
  return doc;
}

VerificationReport report_from_json(const ordered_json& doc) {
  static const char* keys[] = {"suite", "params", "checks", "eigenvalues", "seed", "version", "wall_time_ms", "pass"};
  if (!doc.is_object() || doc.size() != std::size(keys))
    throw Error(ErrorCode::Io, "report must be an object with exactly the v1 keys");
  for (const char* k : keys)
    if (!doc.contains(k)) throw Error(ErrorCode::Io, std::string("report is missing '") + k + "'");
  try {
    VerificationReport r;
    r.suite = doc.at("suite").get<std::string>();
    r.params = doc.at("params");
    for (const auto& c : doc.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), number_or_nan(c.at("value")),
                          number_or_nan(c.at("threshold")), c.at("pass").get<bool>()});
    for (const auto& v : doc.at("eigenvalues")) r.eigenvalues.push_back(number_or_nan(v));
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.version = doc.at("version").get<std::string>();
    r.wall_time_ms = number_or_nan(doc.at("wall_time_ms"));
    if (doc.at("pass").get<bool>() != r.pass()) throw Error(ErrorCode::Io, "report pass flag disagrees with checks");
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, std::string("malformed report: ") + e.what());
  }
}

VerificationReport parse_report(const std::string& text) {
  try {
    return report_from_json(ordered_json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, std::string("report is not valid JSON: ") + e.what());
  }
}

std::string to_csv(const VerificationReport& r) {
  std::string out = "check,value,threshold,pass\n";
  for (const auto& c : r.checks)
    out += c.name + "," + format_double(c.value) + "," + format_double(c.threshold) + "," +
           (c.pass ? "true" : "false") + "\n";
  return out;
}

std::string emit_string(const VerificationReport& r, ReportFormat format) {
  return format == ReportFormat::Json ? to_json(r).dump(2) + "\n" : to_csv(r);
}

void emit(const VerificationReport& r, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << emit_string(r, format);
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.seed << ", " << std::fixed << std::setprecision(1) << r.wall_time_ms
     << " ms)\n";
  os << std::scientific << std::setprecision(3);
  for (const auto& c : r.checks)
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << c.name << std::right << ' '
       << std::setw(11) << c.value << "  (threshold " << c.threshold << ")\n";
  os << (r.pass() ? "PASS" : "FAIL") << ": " << r.checks.size() << " checks\n";
  return os.str();
}

void write_spectrum_dump(const std::vector<double>& eigenvalues, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) out << i << ' ' << eigenvalues[i] << '\n';
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace spinlab
