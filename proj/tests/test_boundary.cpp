// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spinlab/boundary.hpp"
#include "spinlab/fields.hpp"
#include "spinlab/frames.hpp"
#include "spinlab/models.hpp"
#include "spinlab/quadrature.hpp"

using namespace spinlab;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::numbers::pi;

namespace {

const Complex I(0, 1);

ModelDomain domain_for(DomainKind kind, int n) {
  return make_domain(kind, n, kind == DomainKind::EuclideanBall ? 1.3 : 0.8);
}

}  // namespace

class BoundaryCase : public ::testing::TestWithParam<std::tuple<DomainKind, int>> {};

TEST_P(BoundaryCase, RestrictionReproducesPolynomials) {
  const auto [kind, n] = GetParam();
  auto d = domain_for(kind, n);
  auto psi = random_polynomial_field(d, 3, 17);
  auto phi = restrict_to_boundary(psi);
  const double a = d.euclidean_radius();
  for (const auto& u : boundary_samples(n, 25, 4)) EXPECT_LT((phi(u) - psi(a * u)).norm(), 1e-10);
}

TEST_P(BoundaryCase, RestrictionOfZeroIsZero) {
  const auto [kind, n] = GetParam();
  auto d = domain_for(kind, n);
  EXPECT_EQ(restrict_to_boundary(zero_field(d)).coefficients().norm(), 0.0);
}

TEST_P(BoundaryCase, RestrictionIsLinear) {
  const auto [kind, n] = GetParam();
  auto d = domain_for(kind, n);
  auto basis = make_boundary_basis(d);
  auto f = restrict_to_boundary(random_polynomial_field(d, 2, 1), basis);
  auto g = restrict_to_boundary(random_polynomial_field(d, 2, 2), basis);
  auto psi_f = random_polynomial_field(d, 2, 1), psi_g = random_polynomial_field(d, 2, 2);
  InteriorField sum(d, InteriorField::Basis::CartesianPolynomial,
                    [&](const VectorXd& x) { return VectorXcd(psi_f(x) + Complex(2, -1) * psi_g(x)); });
  auto h = restrict_to_boundary(sum, basis);
  EXPECT_LT((h - (f + Complex(2, -1) * g)).coefficients().norm(), 1e-11);
}

class FlatBoundary : public ::testing::TestWithParam<int> {};

TEST_P(FlatBoundary, ConstantSpinorNorm) {
  const int n = GetParam();
  auto d = domain_for(DomainKind::EuclideanBall, n);
  VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 8);
  auto phi = restrict_to_boundary(parallel_spinor(d, psi0));
  const double area = unit_sphere_area(n) * std::pow(d.radius(), n - 1);
  EXPECT_NEAR(phi.l2_norm(), psi0.norm() * std::sqrt(area), 1e-11);
  EXPECT_NEAR(std::abs(phi.inner(phi) - phi.l2_norm() * phi.l2_norm()), 0.0, 1e-11);
}

INSTANTIATE_TEST_SUITE_P(Dims, FlatBoundary, ::testing::Values(2, 3));

// Parallel and imaginary Killing spinors restrict to generalized Killing
// spinors: nabla^S_X phi = -(H/2) gamma^S(X) phi - s (i/2) gamma(X) phi.
TEST_P(BoundaryCase, GeneralizedKillingRestriction) {
  const auto [kind, n] = GetParam();
  auto d = domain_for(kind, n);
  const double H = d.mean_curvature();
  const double a = d.euclidean_radius();
  for (int s : {1, -1}) {
    VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 12);
    InteriorField psi = kind == DomainKind::EuclideanBall
                            ? parallel_spinor(d, psi0)
                            : imaginary_killing_spinor(d, s > 0 ? Sign::Plus : Sign::Minus, psi0);
    const double ks = kind == DomainKind::EuclideanBall ? 0.0 : s;
    const BoundarySpinorFn phi = [&](const VectorXd& u) { return psi(a * u); };
    for (const auto& u : boundary_samples(n, 20, 3)) {
      const VectorXd nu = -u;
      const Eigen::MatrixXd T = tangent_frame(u);
      for (int k = 0; k < n - 1; ++k) {
        const VectorXd X = T.col(k);
        const VectorXcd v = phi(u);
        VectorXcd r = intrinsic_covariant(d, phi, u, X) + 0.5 * H * gamma_s(d.rep(), X, nu) * v +
                      ks * 0.5 * I * clifford_mul(d.rep(), X, v);
        EXPECT_LT(r.norm(), 1e-8 * v.norm());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Models, BoundaryCase,
                         ::testing::Combine(::testing::Values(DomainKind::EuclideanBall, DomainKind::HyperbolicBall),
                                            ::testing::Values(2, 3)));

TEST(Boundary, BasisMismatch) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto coarse = make_boundary_basis(d, Truncation{16, 48});
  auto fine = make_boundary_basis(d, Truncation{32, 48});
  BoundaryField f(d, coarse, VectorXcd::Ones(coarse->size()));
  BoundaryField g(d, fine, VectorXcd::Ones(fine->size()));
  try {
    auto h = f + g;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BasisMismatch);
  }
  auto d3 = make_domain(DomainKind::EuclideanBall, 3, 1.0);
  EXPECT_THROW(restrict_to_boundary(zero_field(d3), coarse), Error);
}

TEST(Boundary, CircleBasisSizes) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto basis = make_boundary_basis(d);
  EXPECT_EQ(basis->kind(), BoundaryBasisKind::FourierS1);
  EXPECT_EQ(basis->size(), 2 * 64);
  EXPECT_EQ(basis->sectors().size(), 64u);
}

TEST(Boundary, UnitFromAngles) {
  EXPECT_LT((unit_from_angles(2, pi / 2) - VectorXd::Unit(2, 1)).norm(), 1e-15);
  EXPECT_LT((unit_from_angles(3, 0.0) - VectorXd::Unit(3, 2)).norm(), 1e-15);
  EXPECT_NEAR(unit_from_angles(3, 0.7, 2.1).norm(), 1.0, 1e-15);
}

TEST(Boundary, SphericalProfileNormalization) {
  // Azimuthally integrated square of each profile is normalized over the sphere.
  VectorXd x, w;
  gauss_legendre(40, x, w);
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      double s = 0;
      for (int i = 0; i < x.size(); ++i) s += w(i) * std::pow(sph_profile(l, m, std::acos(x(i))), 2);
      EXPECT_NEAR(2 * pi * s, 1.0, 1e-12) << l << "," << m;
    }
}

TEST(Boundary, SphericalProfileDerivative) {
  const double h = 1e-5;
  for (int l = 0; l <= 5; ++l)
    for (int m = -l; m <= l; ++m)
      for (double t : {0.3, 1.1, 2.5}) {
        const double fd = (sph_profile(l, m, t + h) - sph_profile(l, m, t - h)) / (2 * h);
        EXPECT_NEAR(sph_profile_dtheta(l, m, t), fd, 1e-8) << l << "," << m;
      }
}
