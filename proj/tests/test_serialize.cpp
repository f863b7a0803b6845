// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <limits>
#include <sstream>

#include "spinlab/fields.hpp"
#include "spinlab/random.hpp"
#include "spinlab/serialize.hpp"
#include "spinlab/solve.hpp"

using namespace spinlab;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

void expect_same_values(const InteriorField& a, const InteriorField& b) {
  SeededRng rng(3);
  for (int t = 0; t < 10; ++t) {
    VectorXd x(a.domain().n());
    for (int k = 0; k < x.size(); ++k) x(k) = 0.5 * a.domain().euclidean_radius() * (2 * rng.uniform() - 1);
    x *= 0.9 / std::sqrt(double(x.size()));
    EXPECT_EQ(a(x), b(x));
  }
}

// Text round trip through the serializer, as a file would see it.
InteriorField through_text(const InteriorField& f) {
  return interior_field_from_json(nlohmann::json::parse(to_json(f).dump()));
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("spinlab_test_" + name)).string();
}

}  // namespace

TEST(Serialize, PolynomialField) {
  auto d = make_domain(DomainKind::HyperbolicBall, 3, 0.7);
  auto f = random_polynomial_field(d, 3, 11);
  auto g = through_text(f);
  EXPECT_EQ(g.coefficients(), f.coefficients());
  EXPECT_EQ(g.basis(), InteriorField::Basis::CartesianPolynomial);
  EXPECT_TRUE(g.domain().same_geometry(d));
  expect_same_values(f, g);
}

TEST(Serialize, KillingSpinor) {
  auto d = make_domain(DomainKind::HyperbolicBall, 2, 1.2);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto f = imaginary_killing_spinor(d, s, random_spinor(2, 5));
    auto g = through_text(f);
    EXPECT_EQ(g.basis(), InteriorField::Basis::ClosedForm);
    expect_same_values(f, g);
  }
}

TEST(Serialize, ModeExpansion) {
  auto d = make_domain(DomainKind::HyperbolicBall, 2, 0.9);
  auto phi = restrict_to_boundary(random_polynomial_field(d, 2, 1));
  auto f = extend_harmonic(d, phi, {ConditionKind::Chirality, Sign::Minus});
  auto g = through_text(f);
  EXPECT_EQ(g.basis(), InteriorField::Basis::ModeExpansion);
  EXPECT_EQ(g.metadata(), f.metadata());
  expect_same_values(f, g);
}

TEST(Serialize, BoundaryFieldAndDomain) {
  for (int n : {2, 3}) {
    Resolution res;
    res.boundary = {32, 16};
    res.interior.radial_nodes = 9;
    auto d = make_domain(DomainKind::EuclideanBall, n, 1.5, res);
    auto phi = restrict_to_boundary(random_polynomial_field(d, 2, 4));
    auto back = boundary_field_from_json(nlohmann::json::parse(to_json(phi).dump()));
    EXPECT_EQ(back.coefficients(), phi.coefficients());
    EXPECT_TRUE(back.basis().compatible(phi.basis()));

    auto dd = domain_from_json(nlohmann::json::parse(to_json(d).dump()));
    EXPECT_TRUE(dd.same_geometry(d));
    EXPECT_EQ(dd.resolution().interior.radial_nodes, 9);
    EXPECT_EQ(dd.resolution().boundary.theta_nodes, 16);
  }
}

TEST(Serialize, FileRoundTrip) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto f = random_polynomial_field(d, 2, 3);
  const std::string path = temp_path("field.json");
  write_json_file(to_json(f), path);
  expect_same_values(f, interior_field_from_json(read_json_file(path)));
  std::filesystem::remove(path);
}

TEST(Serialize, RejectsForeignDocuments) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto doc = nlohmann::json::parse(to_json(random_polynomial_field(d, 1, 1)).dump());
  auto expect_code = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([&] { boundary_field_from_json(doc); }, ErrorCode::BasisMismatch);
  auto bad = doc;
  bad["version"] = 99;
  expect_code([&] { interior_field_from_json(bad); }, ErrorCode::Io);
  bad = doc;
  bad["data"].push_back(1.0);
  expect_code([&] { interior_field_from_json(bad); }, ErrorCode::Io);
  expect_code([&] { interior_field_from_json(nlohmann::json::object()); }, ErrorCode::Io);
  expect_code([&] { read_json_file(temp_path("does_not_exist.json")); }, ErrorCode::Io);
}

TEST(MatrixExport, TextAndBinaryAreExact) {
  MatrixXcd m(3, 2);
  m << Complex(1, -2), Complex(1.0 / 3, 0), Complex(0, std::numeric_limits<double>::denorm_min()),
      Complex(-1e300, 1e-300), Complex(std::acos(-1.0), std::exp(1.0)), Complex(0, 0);
  for (bool binary : {false, true}) {
    std::stringstream buf;
    if (binary)
      export_matrix_binary(m, buf);
    else
      export_matrix_text(m, buf);
    const MatrixXcd back = binary ? import_matrix_binary(buf) : import_matrix_text(buf);
    EXPECT_EQ(back, m);

    const std::string path = temp_path(binary ? "m.bin" : "m.txt");
    export_matrix(m, path, binary);
    EXPECT_EQ(import_matrix(path, binary), m);
    std::filesystem::remove(path);
  }
}

TEST(MatrixExport, TextHeaderAndErrors) {
  std::stringstream buf;
  export_matrix_text(MatrixXcd::Identity(2, 2), buf);
  std::string first;
  std::getline(buf, first);
  EXPECT_EQ(first, "spinlab-matrix 1 2 2");
  std::stringstream truncated("spinlab-matrix 1 2 2\n1 0\n");
  EXPECT_THROW(import_matrix_text(truncated), Error);
  std::stringstream wrong("NOTMAGIC");
  EXPECT_THROW(import_matrix_binary(wrong), Error);
}
