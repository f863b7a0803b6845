// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/serialize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>

#include "spinlab/solve.hpp"

namespace spinlab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFieldFormat = "spinlab-spinor-field";

ordered_json interleave(const Eigen::VectorXcd& v) {
  ordered_json data = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    data.push_back(v(i).real());
    data.push_back(v(i).imag());
  }
  return data;
}

Eigen::VectorXcd deinterleave(const json& data) {
  if (!data.is_array() || data.size() % 2 != 0)
    throw Error(ErrorCode::Io, "field data must be an even-length array of (re, im) pairs");
  Eigen::VectorXcd v(Eigen::Index(data.size() / 2));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Complex(data.at(std::size_t(2 * i)).get<double>(), data.at(std::size_t(2 * i + 1)).get<double>());
  return v;
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::Io, std::string("missing key '") + key + "'");
  return doc.at(key);
}

void check_header(const json& doc, const std::string& support) {
  if (require(doc, "format").get<std::string>() != kFieldFormat)
    throw Error(ErrorCode::Io, "not a spinlab spinor field document");
  if (require(doc, "version").get<int>() != kFieldFormatVersion)
    throw Error(ErrorCode::Io, "unsupported field format version");
  if (require(doc, "support").get<std::string>() != support)
    throw Error(ErrorCode::BasisMismatch, "document holds a " + doc.at("support").get<std::string>() + " field");
}

ordered_json header(const std::string& support, const std::string& basis, const ModelDomain& domain) {
  ordered_json doc;
  doc["format"] = kFieldFormat;
  doc["version"] = kFieldFormatVersion;
  doc["support"] = support;
  doc["basis"] = basis;
  doc["truncation"] = ordered_json::object();
  doc["domain"] = to_json(domain);
  doc["spinor_dim"] = domain.rep().spinor_dim();
  return doc;
}

double meta(const json& doc, const char* key) {
  return require(require(doc, "metadata"), key).get<double>();
}

}  // namespace

ordered_json to_json(const ModelDomain& domain) {
  const Resolution& r = domain.resolution();
  ordered_json d;
  d["kind"] = to_string(domain.kind());
  d["n"] = domain.n();
  d["radius"] = domain.radius();
  d["resolution"] = {{"fourier_modes", r.boundary.fourier_modes}, {"theta_nodes", r.boundary.theta_nodes},
                     {"radial_nodes", r.interior.radial_nodes},   {"angular_nodes", r.interior.angular_nodes},
                     {"polar_nodes", r.interior.polar_nodes},     {"fd_divisions", r.interior.fd_divisions}};
  return d;
}

ModelDomain domain_from_json(const json& doc) {
  Resolution r;
  if (doc.contains("resolution")) {
    const json& q = doc.at("resolution");
    r.boundary.fourier_modes = q.value("fourier_modes", r.boundary.fourier_modes);
    r.boundary.theta_nodes = q.value("theta_nodes", r.boundary.theta_nodes);
    r.interior.radial_nodes = q.value("radial_nodes", r.interior.radial_nodes);
    r.interior.angular_nodes = q.value("angular_nodes", r.interior.angular_nodes);
    r.interior.polar_nodes = q.value("polar_nodes", r.interior.polar_nodes);
    r.interior.fd_divisions = q.value("fd_divisions", r.interior.fd_divisions);
  }
  return ModelDomain(domain_kind_from_string(require(doc, "kind").get<std::string>()), require(doc, "n").get<int>(),
                     require(doc, "radius").get<double>(), r);
}

ordered_json to_json(const InteriorField& field) {
  ordered_json doc = header("interior", to_string(field.basis()), field.domain());
  const auto& md = field.metadata();
  if (field.basis() == InteriorField::Basis::CartesianPolynomial && md.count("degree"))
    doc["truncation"]["degree"] = int(md.at("degree"));
  if (field.basis() == InteriorField::Basis::ModeExpansion) {
    doc["truncation"]["fourier_modes"] = int(md.at("fourier_modes"));
    doc["truncation"]["theta_nodes"] = int(md.at("theta_nodes"));
  }
  doc["metadata"] = ordered_json::object();
  for (const auto& [k, v] : md) doc["metadata"][k] = v;
  doc["data"] = interleave(field.coefficients());
  return doc;
}

InteriorField interior_field_from_json(const json& doc) {
  check_header(doc, "interior");
  const ModelDomain domain = domain_from_json(require(doc, "domain"));
  const Eigen::VectorXcd c = deinterleave(require(doc, "data"));
  const std::string basis = require(doc, "basis").get<std::string>();
  if (basis == "cartesian-polynomial") {
    const int degree = require(require(doc, "truncation"), "degree").get<int>();
    return polynomial_field(domain, degree, c);
  }
  if (basis == "closed-form") {
    return imaginary_killing_spinor(domain, meta(doc, "sign") > 0 ? Sign::Plus : Sign::Minus, c);
  }
  if (basis == "mode-expansion") {
    const json& t = require(doc, "truncation");
    Truncation tr;
    tr.fourier_modes = require(t, "fourier_modes").get<int>();
    tr.theta_nodes = require(t, "theta_nodes").get<int>();
    BoundaryCondition bc;
    bc.kind = meta(doc, "condition_kind") == 0.0 ? ConditionKind::Mit : ConditionKind::Chirality;
    bc.sign = meta(doc, "condition_sign") > 0 ? Sign::Plus : Sign::Minus;
    return mode_expansion_field(domain, tr, bc, c);
  }
  throw Error(ErrorCode::Io, "unknown interior basis '" + basis + "'");
}

ordered_json to_json(const BoundaryField& field) {
  ordered_json doc = header("boundary", to_string(field.basis().kind()), field.domain());
  const Truncation& t = field.basis().truncation();
  doc["truncation"]["fourier_modes"] = t.fourier_modes;
  doc["truncation"]["theta_nodes"] = t.theta_nodes;
  doc["metadata"] = ordered_json::object();
  doc["data"] = interleave(field.coefficients());
  return doc;
}

BoundaryField boundary_field_from_json(const json& doc) {
  check_header(doc, "boundary");
  const ModelDomain domain = domain_from_json(require(doc, "domain"));
  const json& t = require(doc, "truncation");
  Truncation tr;
  tr.fourier_modes = require(t, "fourier_modes").get<int>();
  tr.theta_nodes = require(t, "theta_nodes").get<int>();
  auto basis = make_boundary_basis(domain, tr);
  if (to_string(basis->kind()) != require(doc, "basis").get<std::string>())
    throw Error(ErrorCode::BasisMismatch, "basis name does not match the domain dimension");
  Eigen::VectorXcd c = deinterleave(require(doc, "data"));
  if (c.size() != basis->size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count does not match basis");
  return BoundaryField(domain, basis, std::move(c));
}

void write_json_file(const ordered_json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// ---- dense matrices -------------------------------------------------------

namespace {

constexpr char kBinaryMagic[8] = {'S', 'L', 'M', 'A', 'T', 'R', 'X', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw Error(ErrorCode::Io, "truncated binary matrix");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

}  // namespace

void export_matrix_text(const Eigen::MatrixXcd& m, std::ostream& out) {
  out << "spinlab-matrix 1 " << m.rows() << ' ' << m.cols() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
  if (!out) throw Error(ErrorCode::Io, "matrix write failed");
}

Eigen::MatrixXcd import_matrix_text(std::istream& in) {
  std::string tag;
  int version = 0;
  Eigen::Index rows = -1, cols = -1;
  if (!(in >> tag >> version >> rows >> cols) || tag != "spinlab-matrix" || version != 1 || rows < 0 || cols < 0)
    throw Error(ErrorCode::Io, "bad matrix header");
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      double re = 0, im = 0;
      if (!(in >> re >> im)) throw Error(ErrorCode::Io, "truncated matrix data");
      m(i, j) = Complex(re, im);
    }
  return m;
}

void export_matrix_binary(const Eigen::MatrixXcd& m, std::ostream& out) {
  out.write(kBinaryMagic, 8);
  put_u64(out, std::uint64_t(m.rows()));
  put_u64(out, std::uint64_t(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      put_u64(out, std::bit_cast<std::uint64_t>(m(i, j).real()));
      put_u64(out, std::bit_cast<std::uint64_t>(m(i, j).imag()));
    }
  if (!out) throw Error(ErrorCode::Io, "matrix write failed");
}

Eigen::MatrixXcd import_matrix_binary(std::istream& in) {
  char magic[8];
  if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kBinaryMagic))
    throw Error(ErrorCode::Io, "bad binary matrix magic");
  const auto rows = Eigen::Index(get_u64(in));
  const auto cols = Eigen::Index(get_u64(in));
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = std::bit_cast<double>(get_u64(in));
      const double im = std::bit_cast<double>(get_u64(in));
      m(i, j) = Complex(re, im);
    }
  return m;
}

void export_matrix(const Eigen::MatrixXcd& m, const std::string& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  binary ? export_matrix_binary(m, out) : export_matrix_text(m, out);
}

Eigen::MatrixXcd import_matrix(const std::string& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return binary ? import_matrix_binary(in) : import_matrix_text(in);
}

}  // namespace spinlab
