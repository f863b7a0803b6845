// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "spinlab/boundary.hpp"
#include "spinlab/fields.hpp"
#include "spinlab/integrals.hpp"
#include "spinlab/operators.hpp"
#include "spinlab/quadrature.hpp"
#include "spinlab/random.hpp"
#include "spinlab/solve.hpp"

using namespace spinlab;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

const Complex I(0, 1);
constexpr BoundaryCondition kMitPlus{ConditionKind::Mit, Sign::Plus};

std::vector<VectorXd> interior_points(const ModelDomain& d, int count, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<VectorXd> out;
  for (int i = 0; i < count; ++i) {
    VectorXd x(d.n());
    for (int k = 0; k < d.n(); ++k) x(k) = rng.normal();
    out.push_back(x.normalized() * d.euclidean_radius() * 0.95 * std::sqrt(rng.uniform()));
  }
  return out;
}

BoundaryField random_boundary_data(const ModelDomain& d, std::uint64_t seed) {
  // Smooth data: a random cubic restricted to the circle.
  return restrict_to_boundary(random_polynomial_field(d, 3, seed));
}

}  // namespace

TEST(Extension, ConstantDataExtendsToConstant) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  const VectorXcd psi0 = random_spinor(2, 4);
  auto phi = restrict_to_boundary(parallel_spinor(d, psi0));
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto psi = extend_harmonic(d, phi, {ConditionKind::Mit, s});
    for (const auto& x : interior_points(d, 20, 1)) EXPECT_LT((psi(x) - psi0).norm(), 1e-10);
  }
}

// (z^2, zbar^3) is harmonic, so its trace must extend back to itself.
TEST(Extension, HarmonicPolynomialIsReproduced) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  InteriorField target(d, InteriorField::Basis::ClosedForm, [](const VectorXd& x) {
    const Complex z(x(0), x(1));
    return VectorXcd(Eigen::Vector2cd(z * z, std::pow(std::conj(z), 3)));
  });
  auto psi = extend_harmonic(d, restrict_to_boundary(target), kMitPlus);
  for (const auto& x : interior_points(d, 20, 2)) EXPECT_LT((psi(x) - target(x)).norm(), 1e-10);
}

TEST(Extension, SolvesBoundaryProblem) {
  for (auto kind : {DomainKind::EuclideanBall, DomainKind::HyperbolicBall})
    for (auto cond : {BoundaryCondition{ConditionKind::Mit, Sign::Plus}, BoundaryCondition{ConditionKind::Mit, Sign::Minus},
                      BoundaryCondition{ConditionKind::Chirality, Sign::Plus},
                      BoundaryCondition{ConditionKind::Chirality, Sign::Minus}}) {
      if (kind == DomainKind::EuclideanBall && cond.kind == ConditionKind::Chirality) continue;
      auto d = make_domain(kind, 2, 0.9);
      auto phi = random_boundary_data(d, 3);
      auto psi = extend_harmonic(d, phi, cond);
      const int s = extension_eigen_sign(cond);
      for (const auto& x : interior_points(d, 10, 5))
        EXPECT_LT((ambient_dirac_at(psi, x) - double(s) * I * psi(x)).norm(), 1e-7) << to_string(cond);
      auto P = cond.kind == ConditionKind::Mit ? mit_projection(d, cond.sign) : chirality_projection(d, cond.sign);
      auto trace = restrict_to_boundary(psi, phi.basis_handle());
      EXPECT_LT(P.apply(trace - phi).l2_norm(), 1e-9 * phi.l2_norm()) << to_string(cond);
    }
}

TEST(Extension, ZeroDataAndLinearity) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto basis = make_boundary_basis(d);
  auto zero = extend_harmonic(d, BoundaryField(d, basis, VectorXcd::Zero(basis->size())), kMitPlus);
  auto f = random_boundary_data(d, 1), g = random_boundary_data(d, 2);
  auto ef = extend_harmonic(d, f, kMitPlus), eg = extend_harmonic(d, g, kMitPlus);
  auto efg = extend_harmonic(d, f + Complex(3, -1) * g, kMitPlus);
  for (const auto& x : interior_points(d, 10, 3)) {
    EXPECT_EQ(zero(x).norm(), 0.0);
    EXPECT_LT((efg(x) - ef(x) - Complex(3, -1) * eg(x)).norm(), 1e-10);
  }
}

TEST(Extension, UnsupportedCases) {
  auto d3 = make_domain(DomainKind::EuclideanBall, 3, 1.0);
  auto d2 = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto expect_code = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([&] { extend_harmonic(d3, restrict_to_boundary(zero_field(d3)), kMitPlus); }, ErrorCode::Unsupported);
  expect_code([&] { extend_harmonic(d2, random_boundary_data(d2, 1), {ConditionKind::Chirality, Sign::Plus}); },
              ErrorCode::Unsupported);
  auto other = make_domain(DomainKind::EuclideanBall, 2, 2.0);
  expect_code([&] { extend_harmonic(d2, random_boundary_data(other, 1), kMitPlus); }, ErrorCode::BasisMismatch);
  EXPECT_THROW(boundary_condition_from_string("robin"), Error);
  EXPECT_EQ(to_string(boundary_condition_from_string(to_string(kMitPlus))), to_string(kMitPlus));
}

TEST(BoundaryIdentities, ProjectionIntertwining) {
  for (auto kind : {DomainKind::EuclideanBall, DomainKind::HyperbolicBall}) {
    auto d = make_domain(kind, 2, 1.0);
    auto D = assemble_extrinsic_dirac(d);
    auto phi = random_boundary_data(d, 8);
    auto lhs = D.apply(mit_projection(d, Sign::Plus).apply(phi));
    auto rhs = mit_projection(d, Sign::Minus).apply(D.apply(phi));
    EXPECT_LT((lhs - rhs).l2_norm(), 1e-10 * (1 + D.apply(phi).l2_norm()));
  }
}

TEST(BoundaryIdentities, IntegrationByParts) {
  for (int n : {2, 3}) {
    auto d = make_domain(DomainKind::HyperbolicBall, n, 0.8);
    auto D = assemble_extrinsic_dirac(d);
    auto phi = random_boundary_data(d, 1), chi = random_boundary_data(d, 2);
    EXPECT_LT(std::abs(D.apply(phi).inner(chi) - phi.inner(D.apply(chi))), 1e-10 * (1 + D.apply(phi).l2_norm()));
  }
}

// Boundary energy  int <D phi, phi> - (n-1)/2 H |phi|^2: zero for restricted
// parallel spinors, nonnegative for traces of harmonic spinors.
TEST(BoundaryIdentities, EnergyBalance) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto D = assemble_extrinsic_dirac(d);
  auto energy = [&](const BoundaryField& phi) {
    return phi.inner(D.apply(phi)).real() - 0.5 * d.mean_curvature() * phi.l2_norm() * phi.l2_norm();
  };
  auto admissible = restrict_to_boundary(parallel_spinor(d, random_spinor(2, 1)));
  EXPECT_NEAR(energy(admissible), 0.0, 1e-10);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto psi = extend_harmonic(d, random_boundary_data(d, seed), kMitPlus);
    auto trace = restrict_to_boundary(psi);
    EXPECT_GT(energy(trace), -1e-9);
    EXPECT_NEAR(energy(trace), reilly_residual(psi).lhs_interior, 1e-6);
  }
}

TEST(Rigidity, ParallelDataPasses) {
  for (double r : {1.0, 2.0}) {
    auto d = make_domain(DomainKind::EuclideanBall, 2, r);
    const double H = d.mean_curvature();
    auto phi = restrict_to_boundary(parallel_spinor(d, random_spinor(2, 7)));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      auto rep = rigidity_experiment(d, phi, [H](const VectorXd&) { return H; }, s);
      EXPECT_TRUE(rep.pass);
      EXPECT_GT(rep.control_boundary_dirac_residual / rep.phi_norm, rep.thresholds.boundary_dirac);
      EXPECT_LT(rep.parallelism_residual / rep.psi_sup, 1e-6);
      auto half = rigidity_experiment(d, phi, [H](const VectorXd&) { return 0.5 * H; }, s);
      EXPECT_FALSE(half.pass);
    }
  }
}

TEST(Rigidity, GenericDataFails) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto rep = rigidity_experiment(d, random_boundary_data(d, 4), [](const VectorXd&) { return 1.0; });
  EXPECT_FALSE(rep.pass);
}

TEST(Rigidity, ZeroDataIsDegenerate) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto basis = make_boundary_basis(d);
  try {
    rigidity_experiment(d, BoundaryField(d, basis, VectorXcd::Zero(basis->size())),
                        [](const VectorXd&) { return 1.0; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(Rigidity, HyperbolicKillingDataPasses) {
  auto d = make_domain(DomainKind::HyperbolicBall, 2, 1.0);
  const double H = d.mean_curvature();
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto phi = restrict_to_boundary(imaginary_killing_spinor(d, s, random_spinor(2, 3)));
    EXPECT_TRUE(hyperbolic_rigidity_experiment(d, phi, [H](const VectorXd&) { return H; }, s).pass);
    EXPECT_FALSE(hyperbolic_rigidity_experiment(d, phi, [H](const VectorXd&) { return 0.5 * H; }, s).pass);
  }
}

TEST(Hmr, EqualityOnRoundBalls) {
  for (int n : {2, 3}) {
    auto e = make_domain(DomainKind::EuclideanBall, n, 1.0);
    // Flat ball: the twist lifts the spectrum to q sqrt(H^2 + 1), strictly above q H.
    const double q = 0.5 * (n - 1);
    auto re = hmr_bound_check(e, Sign::Plus);
    EXPECT_NEAR(re.lambda1, q * std::sqrt(2.0), 1e-10);
    EXPECT_GT(re.gap, 0.1);
    EXPECT_FALSE(re.equality);
    for (double rho : {0.5, 2.0}) {
      auto h = make_domain(DomainKind::HyperbolicBall, n, rho);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        auto rh = hmr_bound_check(h, s);
        EXPECT_NEAR(rh.gap, 0.0, 1e-6);
        EXPECT_TRUE(rh.equality);
      }
    }
  }
}

TEST(Hmr, CircleClosedForm) {
  for (double rho : {0.5, 1.0, 2.0}) {
    auto h = make_domain(DomainKind::HyperbolicBall, 2, rho);
    EXPECT_NEAR(hmr_bound_check(h, Sign::Plus).lambda1, 0.5 / std::tanh(rho), 1e-10);
  }
}

TEST(PsiPm, EigenvalueMatchesMeanCurvature) {
  auto r3 = psi_pm_construct(3, 2.0, Sign::Plus);
  EXPECT_NEAR(r3.eigenvalue, 2.0, 1e-10);
  EXPECT_LT(r3.residual, 1e-8);
  auto r2 = psi_pm_construct(2, std::sqrt(2.0), Sign::Minus);
  EXPECT_NEAR(r2.eigenvalue, std::sqrt(2.0) / 2, 1e-10);
  EXPECT_LT(r2.residual, 1e-8);
  EXPECT_THROW(psi_pm_construct(2, 1.0, Sign::Plus), Error);
}
