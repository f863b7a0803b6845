// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spinlab/fields.hpp"
#include "spinlab/frames.hpp"
#include "spinlab/integrals.hpp"
#include "spinlab/random.hpp"

using namespace spinlab;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::numbers::pi;

namespace {

const Complex I(0, 1);

InteriorField plane_field(const ModelDomain& d, Complex (*a)(Complex), Complex (*b)(Complex)) {
  return InteriorField(d, InteriorField::Basis::ClosedForm, [a, b](const VectorXd& x) {
    const Complex z(x(0), x(1));
    return VectorXcd(Eigen::Vector2cd(a(z), b(z)));
  });
}

}  // namespace

TEST(Reilly, ConstantSpinor) {
  for (int n : {2, 3})
    for (double r : {1.0, 2.0}) {
      auto d = make_domain(DomainKind::EuclideanBall, n, r);
      auto rep = reilly_residual(parallel_spinor(d, random_spinor(d.rep().spinor_dim(), 1)));
      EXPECT_LT(rep.residual, 1e-10);
      EXPECT_LT(std::abs(rep.terms.at("gradient")), 1e-12);
    }
}

// psi = (z, 0): |nabla psi|^2 = 2 and D psi = 0, so both sides equal 2 pi on the unit disk.
TEST(Reilly, LinearHolomorphicField) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto psi = plane_field(d, [](Complex z) { return z; }, [](Complex) { return Complex(0); });
  auto r = reilly_residual(psi);
  EXPECT_NEAR(r.terms.at("gradient"), 2 * pi, 1e-10);
  EXPECT_NEAR(r.terms.at("dirac"), 0.0, 1e-10);
  EXPECT_NEAR(r.lhs_interior, 2 * pi, 1e-10);
  EXPECT_NEAR(r.rhs_boundary, 2 * pi, 1e-10);
}

TEST(Reilly, RandomFieldsConverge) {
  for (int n : {2, 3}) {
    auto d = make_domain(DomainKind::EuclideanBall, n, 1.0);
    const InteriorResolution fine = d.resolution().interior.refined();
    for (std::uint64_t seed = 1; seed <= (n == 2 ? 5u : 2u); ++seed) {
      auto f = random_polynomial_field(d, 5, seed);
      const double coarse = reilly_residual(f).residual;
      const double refined = reilly_residual(f, fine).residual;
      EXPECT_LT(coarse, 1e-5);
      EXPECT_GE(coarse / refined, 4.0);
    }
  }
}

TEST(Reilly, ZeroField) {
  auto d = make_domain(DomainKind::EuclideanBall, 3, 1.0);
  auto r = reilly_residual(zero_field(d));
  EXPECT_EQ(r.residual, 0.0);
  for (const auto& [name, v] : r.terms) EXPECT_EQ(v, 0.0) << name;
}

class HyperbolicReilly : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(HyperbolicReilly, KillingTermsVanish) {
  const auto [n, s] = GetParam();
  const Sign sign = s > 0 ? Sign::Plus : Sign::Minus;
  auto d = make_domain(DomainKind::HyperbolicBall, n, 1.0);
  auto psi = imaginary_killing_spinor(d, sign, random_spinor(d.rep().spinor_dim(), 5).normalized());
  auto r = hyperbolic_reilly_residual(psi, sign);
  EXPECT_LT(std::abs(r.terms.at("twistor")), 1e-5);
  EXPECT_LT(std::abs(r.terms.at("dirac")), 1e-5);
  EXPECT_LT(std::abs(r.terms.at("curvature")), 1e-12);
  EXPECT_LT(std::abs(r.rhs_boundary), 1e-5);
  EXPECT_LT(r.residual, 1e-5);
}

TEST_P(HyperbolicReilly, RandomField) {
  const auto [n, s] = GetParam();
  const Sign sign = s > 0 ? Sign::Plus : Sign::Minus;
  auto d = make_domain(DomainKind::HyperbolicBall, n, 1.0);
  auto f = random_polynomial_field(d, 5, 7);
  const double coarse = hyperbolic_reilly_residual(f, sign).residual;
  const double refined = hyperbolic_reilly_residual(f, sign, d.resolution().interior.refined()).residual;
  EXPECT_LT(coarse, 1e-5);
  EXPECT_GE(coarse / refined, 4.0);
}

INSTANTIATE_TEST_SUITE_P(Signs, HyperbolicReilly,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::Values(1, -1)));

TEST(Reilly, TwistedFormRequiresHyperbolicBall) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  try {
    hyperbolic_reilly_residual(zero_field(d), Sign::Plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

// psi = (zbar, 1): D psi = (0, 2i); both sides of Green's formula equal 4 pi i.
TEST(Green, ClosedFormValue) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  auto psi = plane_field(d, [](Complex z) { return std::conj(z); }, [](Complex) { return Complex(1); });
  auto g = green_residual(psi);
  EXPECT_LT(std::abs(g.lhs - 4.0 * pi * I), 1e-10);
  EXPECT_LT(std::abs(g.rhs - 4.0 * pi * I), 1e-10);
  EXPECT_LT(g.real_part, 1e-10);
}

TEST(Green, ConstantAndRandomFields) {
  for (auto kind : {DomainKind::EuclideanBall, DomainKind::HyperbolicBall})
    for (int n : {2, 3}) {
      auto d = make_domain(kind, n, 0.9);
      auto c = green_residual(InteriorField(d, InteriorField::Basis::ClosedForm,
                                            [v = random_spinor(d.rep().spinor_dim(), 2)](const VectorXd&) {
                                              return v;
                                            }));
      EXPECT_LT(c.residual, 1e-10);
      auto g = green_residual(random_polynomial_field(d, 3, 9));
      EXPECT_LT(g.residual, 1e-9);
      EXPECT_LT(g.real_part, 1e-9);
      EXPECT_GT(std::abs(g.lhs), 1e-3);
    }
}

TEST(EnergyMomentum, ParallelSpinorGivesHalfWeingarten) {
  for (int n : {2, 3})
    for (double r : {1.0, 2.0}) {
      auto d = make_domain(DomainKind::EuclideanBall, n, r);
      const VectorXcd psi0 = random_spinor(d.rep().spinor_dim(), 3).normalized();
      auto em = energy_momentum(d, [psi0](const VectorXd&) { return psi0; });
      EXPECT_LT(em.weingarten_residual, 1e-8);
      EXPECT_LT(em.symmetry_residual, 1e-8);
      ASSERT_FALSE(em.tensors.empty());
      const Eigen::MatrixXd expected = 0.5 / r * Eigen::MatrixXd::Identity(n - 1, n - 1);
      EXPECT_LT((em.tensors.front() - expected).norm(), 1e-8);
    }
}

TEST(EnergyMomentum, ZeroLocus) {
  auto d = make_domain(DomainKind::EuclideanBall, 2, 1.0);
  const VectorXcd psi0 = VectorXcd::Ones(2);
  const BoundarySpinorFn phi = [psi0](const VectorXd& u) { return VectorXcd(u(0) * psi0); };
  try {
    energy_momentum_at(d, phi, VectorXd::Unit(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroLocus);
  }
}

TEST(Lichnerowicz, FlatSquareIsLaplacian) {
  for (int n : {2, 3}) {
    auto d = make_domain(DomainKind::EuclideanBall, n, 1.0);
    EXPECT_LT(lichnerowicz_residual(random_polynomial_field(d, 4, 3), 20, 1).max, 1e-6);
  }
  auto h = make_domain(DomainKind::HyperbolicBall, 2, 1.0);
  EXPECT_THROW(lichnerowicz_residual(zero_field(h), 5, 1), Error);
}
