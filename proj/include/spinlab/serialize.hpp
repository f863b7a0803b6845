// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spinlab/boundary.hpp"
#include "spinlab/fields.hpp"

namespace spinlab {

/// Spinor field document, version 1:
///   {"format": "spinlab-spinor-field", "version": 1, "support": "interior"|"boundary",
///    "basis": ..., "truncation": {...}, "domain": {...}, "spinor_dim": d,
///    "metadata": {...}, "data": [re0, im0, re1, im1, ...]}
inline constexpr int kFieldFormatVersion = 1;

nlohmann::ordered_json to_json(const InteriorField& field);
nlohmann::ordered_json to_json(const BoundaryField& field);

/// Readers validate the header and rebuild the field on its domain.
InteriorField interior_field_from_json(const nlohmann::json& doc);
BoundaryField boundary_field_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const ModelDomain& domain);
ModelDomain domain_from_json(const nlohmann::json& doc);

void write_json_file(const nlohmann::ordered_json& doc, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

/// Dense complex matrix exchange. Text: a header line
/// "spinlab-matrix 1 <rows> <cols>" then one "re im" pair per line in row-major
/// order. Binary: the 8 bytes "SLMATRX1", uint64 rows and cols, then row-major
/// (re, im) float64 pairs, all little-endian.
void export_matrix_text(const Eigen::MatrixXcd& m, std::ostream& out);
Eigen::MatrixXcd import_matrix_text(std::istream& in);
void export_matrix_binary(const Eigen::MatrixXcd& m, std::ostream& out);
Eigen::MatrixXcd import_matrix_binary(std::istream& in);

void export_matrix(const Eigen::MatrixXcd& m, const std::string& path, bool binary = false);
Eigen::MatrixXcd import_matrix(const std::string& path, bool binary = false);

}  // namespace spinlab
