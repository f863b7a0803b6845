// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spinlab/fields.hpp"
#include "spinlab/models.hpp"
#include "spinlab/operators.hpp"
#include "spinlab/quadrature.hpp"
#include "spinlab/random.hpp"

using namespace spinlab;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::numbers::pi;

namespace {

const Complex I(0, 1);

VectorXd interior_point(int n, double radius, SeededRng& rng) {
  VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.normal();
  return x.normalized() * radius * std::pow(rng.uniform(), 1.0 / n) * 0.9;
}

}  // namespace

TEST(Models, EuclideanExtrinsicData) {
  for (int n : {2, 3}) {
    auto unit = make_domain(DomainKind::EuclideanBall, n, 1.0);
    auto two = make_domain(DomainKind::EuclideanBall, n, 2.0);
    EXPECT_DOUBLE_EQ(unit.mean_curvature(), 1.0);
    EXPECT_DOUBLE_EQ(two.mean_curvature(), 0.5);
    EXPECT_DOUBLE_EQ(two.induced_radius(), 2.0);
    EXPECT_EQ(unit.scalar_curvature(), 0.0);
    EXPECT_EQ(unit.ambient_sectional_curvature(), 0.0);
  }
}

TEST(Models, HyperbolicExtrinsicData) {
  for (int n : {2, 3})
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double rho = hyperbolic_radius_for_alpha(alpha);
      EXPECT_NEAR(1.0 / std::tanh(rho), alpha, 1e-14);
      auto d = make_domain(DomainKind::HyperbolicBall, n, rho);
      EXPECT_NEAR(d.mean_curvature(), alpha, 1e-13);
      EXPECT_NEAR(d.induced_radius(), 1.0 / std::sqrt(alpha * alpha - 1), 1e-13);
      EXPECT_DOUBLE_EQ(d.scalar_curvature(), -double(n * (n - 1)));
      EXPECT_DOUBLE_EQ(d.shifted_scalar_curvature(), 0.0);
      EXPECT_NEAR(d.euclidean_radius(), std::tanh(rho / 2), 1e-15);
    }
}

TEST(Models, RejectsBadInput) {
  EXPECT_THROW(make_domain(DomainKind::EuclideanBall, 2, 0.0), Error);
  EXPECT_THROW(make_domain(DomainKind::EuclideanBall, 2, -1.0), Error);
  EXPECT_THROW(make_domain(DomainKind::HyperbolicBall, 3, 0.0), Error);
  EXPECT_THROW(make_domain(DomainKind::EuclideanBall, 1, 1.0), Error);
  EXPECT_THROW(hyperbolic_radius_for_alpha(1.0), Error);
  EXPECT_THROW(domain_kind_from_string("torus"), Error);
}

TEST(Models, GaussCodazzi) {
  for (auto kind : {DomainKind::EuclideanBall, DomainKind::HyperbolicBall})
    for (int n : {2, 3}) {
      const double radius = kind == DomainKind::EuclideanBall ? 1.5 : hyperbolic_radius_for_alpha(2.0);
      auto ex = boundary_geometry(make_domain(kind, n, radius), 100, 7);
      EXPECT_LT(ex.gauss_codazzi.gauss, 1e-10);
      EXPECT_LT(ex.gauss_codazzi.codazzi, 1e-6);
      EXPECT_EQ(ex.gauss_codazzi.samples, 100);
    }
}

TEST(Models, WeingartenIsUmbilic) {
  auto d = make_domain(DomainKind::HyperbolicBall, 3, 1.0);
  auto ex = boundary_geometry(d, 10);
  VectorXd u = VectorXd(Eigen::Vector3d(1, 2, 2)) / 3.0;
  const Eigen::MatrixXd T = tangent_frame(u);
  EXPECT_LT((T.transpose() * u).norm(), 1e-14);
  EXPECT_LT((T.transpose() * T - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-14);
  const Eigen::MatrixXd A = T.transpose() * ex.weingarten(u) * T;
  EXPECT_LT((A - d.mean_curvature() * Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-13);
}

TEST(Fields, ParallelSpinor) {
  for (int n : {2, 3}) {
    auto d = make_domain(DomainKind::EuclideanBall, n, 1.0);
    VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 4);
    auto psi = parallel_spinor(d, psi0);
    SeededRng rng(derive_seed(1, "parallel"));
    for (int t = 0; t < 20; ++t) {
      VectorXd x = interior_point(n, 1.0, rng);
      EXPECT_NEAR(psi(x).norm(), psi0.norm(), 1e-14);
      for (int k = 0; k < n; ++k) EXPECT_LT(covariant_derivative(psi, x, VectorXd::Unit(n, k)).norm(), 1e-12);
      EXPECT_LT(ambient_dirac_at(psi, x).norm(), 1e-12);
    }
  }
}

TEST(Fields, DegenerateSpinorRejected) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto h = make_domain(DomainKind::HyperbolicBall, 2, 1.0);
  try {
    parallel_spinor(d, VectorXcd::Zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
  EXPECT_THROW(imaginary_killing_spinor(h, Sign::Plus, VectorXcd::Zero(2)), Error);
  EXPECT_THROW(parallel_spinor(h, VectorXcd::Ones(2)), Error);
}

class KillingCase : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(KillingCase, SatisfiesKillingEquation) {
  const auto [n, s] = GetParam();
  const Sign sign = s > 0 ? Sign::Plus : Sign::Minus;
  auto d = make_domain(DomainKind::HyperbolicBall, n, 1.0);
  VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 9);
  auto psi = imaginary_killing_spinor(d, sign, psi0);
  SeededRng rng(derive_seed(2, "killing"));
  double min_norm = 1e300;
  for (int t = 0; t < 20; ++t) {
    VectorXd x = interior_point(n, d.euclidean_radius(), rng);
    const VectorXcd v = psi(x);
    min_norm = std::min(min_norm, v.norm());
    for (int k = 0; k < n; ++k) {
      VectorXd X = VectorXd::Unit(n, k);
      VectorXcd killing = covariant_derivative(psi, x, X) + double(s) * 0.5 * I * clifford_mul(d.rep(), X, v);
      EXPECT_LT(killing.norm(), 1e-6 * v.norm());
    }
    VectorXcd dirac = ambient_dirac_at(psi, x) - double(s) * (n / 2.0) * I * v;
    EXPECT_LT(dirac.norm(), 1e-6 * v.norm());
  }
  EXPECT_GT(min_norm, 0.0);
}

// Closed form |psi|^2 = f |psi0|^2 ... evaluated independently from gamma(x).
TEST_P(KillingCase, ClosedFormAtPoint) {
  const auto [n, s] = GetParam();
  auto d = make_domain(DomainKind::HyperbolicBall, n, 1.0);
  VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 3);
  auto psi = imaginary_killing_spinor(d, s > 0 ? Sign::Plus : Sign::Minus, psi0);
  VectorXd x = VectorXd::Constant(n, 0.2);
  const double f = 2.0 / (1.0 - x.squaredNorm());
  MatrixXcd gx = MatrixXcd::Zero(psi0.size(), psi0.size());
  for (int i = 0; i < n; ++i) gx += x(i) * d.rep().gamma(i);
  VectorXcd expected = std::sqrt(f) * (psi0 - double(s) * I * (gx * psi0));
  EXPECT_LT((psi(x) - expected).norm(), 1e-13);
}

INSTANTIATE_TEST_SUITE_P(Signs, KillingCase,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::Values(1, -1)));

TEST(Fields, PolynomialFieldEvaluation) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto exps = monomial_exponents(2, 2);
  ASSERT_EQ(exps.size(), 6u);
  EXPECT_EQ(exps[0], (std::vector<int>{0, 0}));
  VectorXcd c = VectorXcd::Zero(12);
  // psi = (x^2 y^0 ..., ) via the monomial index of x*y.
  std::size_t xy = 0;
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] == std::vector<int>{1, 1}) xy = k;
  c(2 * xy + 1) = I;
  auto psi = polynomial_field(d, 2, c);
  VectorXd x(2);
  x << 0.3, -0.5;
  EXPECT_LT((psi(x) - VectorXcd(Eigen::Vector2cd(0, I * 0.3 * -0.5))).norm(), 1e-15);
  EXPECT_EQ(zero_field(d)(x).norm(), 0.0);
}

TEST(Fields, RandomFieldsAreSeeded) {
  auto d = make_domain(DomainKind::EuclideanBall, 3, 1.0);
  VectorXd x = VectorXd::Constant(3, 0.1);
  EXPECT_EQ(random_polynomial_field(d, 3, 5)(x), random_polynomial_field(d, 3, 5)(x));
  EXPECT_NE(random_polynomial_field(d, 3, 5)(x), random_polynomial_field(d, 3, 6)(x));
}

TEST(Quadrature, GaussLegendreExactForPolynomials) {
  VectorXd x, w;
  gauss_legendre(8, x, w);
  for (int k = 0; k <= 15; ++k) {
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(w.dot(x.array().pow(k).matrix()), exact, 1e-14) << k;
  }
}

TEST(Quadrature, EuclideanMeasures) {
  InteriorResolution res;
  auto disk = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto ball = make_domain(DomainKind::EuclideanBall, 3, 2.0);
  EXPECT_NEAR(interior_rule(disk, res).weights.sum(), pi, 1e-12);
  EXPECT_NEAR(boundary_rule(disk, res).weights.sum(), 2 * pi, 1e-12);
  EXPECT_NEAR(interior_rule(ball, res).weights.sum(), 4.0 / 3.0 * pi * 8, 1e-11);
  EXPECT_NEAR(boundary_rule(ball, res).weights.sum(), 4 * pi * 4, 1e-11);
  EXPECT_NEAR(unit_ball_volume(2), pi, 1e-15);
  EXPECT_NEAR(unit_sphere_area(3), 4 * pi, 1e-14);
}

TEST(Quadrature, CosineSquaredOnCircle) {
  auto disk = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto rule = boundary_rule(disk, {});
  VectorXd f(static_cast<Eigen::Index>(rule.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) f(Eigen::Index(i)) = std::pow(rule.units[i](0), 2);
  EXPECT_NEAR(integrate(rule, f), pi, 1e-12);
}

TEST(Quadrature, HyperbolicMeasures) {
  InteriorResolution res;
  const double rho = 1.0;
  auto h2 = make_domain(DomainKind::HyperbolicBall, 2, rho);
  auto h3 = make_domain(DomainKind::HyperbolicBall, 3, rho);
  EXPECT_NEAR(interior_rule(h2, res).weights.sum(), 2 * pi * (std::cosh(rho) - 1), 1e-10);
  EXPECT_NEAR(boundary_rule(h2, res).weights.sum(), 2 * pi * std::sinh(rho), 1e-12);
  EXPECT_NEAR(interior_rule(h3, res).weights.sum(), pi * (std::sinh(2 * rho) - 2 * rho), 1e-10);
  EXPECT_NEAR(boundary_rule(h3, res).weights.sum(), 4 * pi * std::pow(std::sinh(rho), 2), 1e-11);
}
