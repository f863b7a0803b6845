// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/frames.hpp"

#include <cmath>
#include <numbers>

#include "spinlab/random.hpp"

namespace spinlab {

namespace {

// exp((t/2) gamma_i gamma_j): rotates e_i toward e_j by the angle t.
Eigen::MatrixXcd rotor(const CliffordRep& rep, int i, int j, double t) {
  const int d = rep.spinor_dim();
  return std::cos(t / 2) * Eigen::MatrixXcd::Identity(d, d) + std::sin(t / 2) * rep.gamma(i) * rep.gamma(j);
}

Eigen::MatrixXd frame_rotation(const Eigen::VectorXd& unit) {
  const int n = int(unit.size());
  Eigen::MatrixXd R(n, n);
  if (n == 2) {
    R.col(0) << -unit(1), unit(0);
  } else {
    const double th = std::acos(std::clamp(unit(2), -1.0, 1.0));
    const double ph = std::atan2(unit(1), unit(0));
    R.col(0) << -std::sin(ph), std::cos(ph), 0.0;
    R.col(1) << std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th);
  }
  R.col(n - 1) = -unit;
  return R;
}

Eigen::VectorXd great_circle(const Eigen::VectorXd& unit, const Eigen::VectorXd& dir, double tau) {
  return std::cos(tau) * unit + std::sin(tau) * dir;
}

}  // namespace

AdaptedFrame adapted_frame(const CliffordRep& rep, const Eigen::VectorXd& unit) {
  const int n = rep.n();
  if (unit.size() != n) throw Error(ErrorCode::DimensionMismatch, "boundary direction has wrong dimension");
  AdaptedFrame f;
  f.rotation = frame_rotation(unit);
  if (n == 2) {
    f.lift = rotor(rep, 0, 1, std::atan2(unit(1), unit(0)) + std::numbers::pi / 2);
  } else if (n == 3) {
    const double th = std::acos(std::clamp(unit(2), -1.0, 1.0));
    const double ph = std::atan2(unit(1), unit(0));
    // S0 rotates by pi about (1,1,0)/sqrt 2: (e1, e2, e3) -> (e2, e1, -e3).
    const Eigen::MatrixXcd s0 = (rep.gamma(1) * rep.gamma(2) + rep.gamma(2) * rep.gamma(0)) / std::sqrt(2.0);
    f.lift = rotor(rep, 0, 1, ph) * rotor(rep, 2, 0, th) * s0;
  } else {
    throw Error(ErrorCode::Unsupported, "adapted boundary frames exist for n = 2, 3");
  }
  f.lift_inverse = f.lift.adjoint();
  return f;
}

double lift_residual(const CliffordRep& rep, const AdaptedFrame& frame) {
  const int n = rep.n();
  const double dim = rep.spinor_dim();
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    const Eigen::MatrixXcd c = frame.lift * rep.gamma(k) * frame.lift_inverse;
    for (int l = 0; l < n; ++l) {
      const double r = -(rep.gamma(l) * c).trace().real() / dim;
      worst = std::max(worst, std::abs(r - frame.rotation(l, k)));
    }
  }
  return worst;
}

Eigen::MatrixXcd gamma_s(const CliffordRep& rep, const Eigen::VectorXd& X, const Eigen::VectorXd& nu) {
  return clifford_matrix(rep, X) * clifford_matrix(rep, nu);
}

Eigen::VectorXcd ambient_covariant(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                                   const Stencil& stencil) {
  const ModelDomain& dom = field.domain();
  const double s = dom.conformal_factor(x);
  return directional_derivative(field, x, X, stencil) / s + dom.spin_connection(x, X) * field(x);
}

Eigen::VectorXcd intrinsic_covariant(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                     const Eigen::VectorXd& unit, const Eigen::VectorXd& X, double step) {
  const CliffordRep& rep = domain.rep();
  const int n = rep.n();
  const double len = X.norm();
  if (len == 0.0) return Eigen::VectorXcd::Zero(rep.spinor_dim());
  const Eigen::VectorXd u = X / len;

  const AdaptedFrame f = adapted_frame(rep, unit);
  // The lift is defined up to sign; keep every sample on the sheet of the center.
  auto sample = [&](double tau, Eigen::VectorXcd& ad, Eigen::MatrixXd& R) {
    const Eigen::VectorXd q = great_circle(unit, u, tau);
    const AdaptedFrame g = adapted_frame(rep, q);
    const double sheet = (f.lift_inverse * g.lift).trace().real() < 0 ? -1.0 : 1.0;
    ad = sheet * (g.lift_inverse * phi(q));
    R = g.rotation;
  };
  Eigen::VectorXcd p1, m1, p2, m2;
  Eigen::MatrixXd Rp1, Rm1, Rp2, Rm2;
  sample(step, p1, Rp1);
  sample(-step, m1, Rm1);
  sample(2 * step, p2, Rp2);
  sample(-2 * step, m2, Rm2);
  const double scale = len / (12 * step * domain.induced_radius());
  const Eigen::VectorXcd dphi = scale * (8.0 * (p1 - m1) - (p2 - m2));
  const Eigen::MatrixXd dR = scale * (8.0 * (Rp1 - Rm1) - (Rp2 - Rm2));

  const Eigen::VectorXcd ad = f.lift_inverse * phi(unit);
  const Eigen::VectorXd x = domain.euclidean_radius() * unit;
  const Eigen::MatrixXd w = dR.transpose() * f.rotation + f.rotation.transpose() * domain.connection_form(x, X) * f.rotation;

  Eigen::VectorXcd out = dphi;
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b)
      if (a != b) out += 0.25 * w(a, b) * (rep.gamma(a) * (rep.gamma(b) * ad));
  return f.lift * out;
}

std::vector<Eigen::VectorXd> boundary_samples(int n, int count, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Eigen::VectorXd> out;
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double t = 2 * std::numbers::pi * rng.uniform();
      Eigen::VectorXd u(2);
      u << std::cos(t), std::sin(t);
      out.push_back(u);
    }
    return out;
  }
  if (n != 3) throw Error(ErrorCode::Unsupported, "boundary samples exist for n = 2, 3");
  while (int(out.size()) < count) {
    Eigen::VectorXd u(3);
    for (int i = 0; i < 3; ++i) u(i) = rng.normal();
    u.normalize();
    if (std::abs(u(2)) < 0.98) out.push_back(u);
  }
  return out;
}

PointResidual gauss_formula_residual(const InteriorField& field, int samples, std::uint64_t seed) {
  const ModelDomain& dom = field.domain();
  const CliffordRep& rep = dom.rep();
  const int n = dom.n();
  const double a = dom.euclidean_radius();
  const ExtrinsicData ex = boundary_geometry(dom, 0);
  SeededRng rng(derive_seed(seed, "gauss-formula/directions"));
  const BoundarySpinorFn phi = [&](const Eigen::VectorXd& u) { return field(a * u); };

  PointResidual res;
  for (const auto& unit : boundary_samples(n, samples, seed)) {
    Eigen::VectorXd X(n);
    for (int i = 0; i < n; ++i) X(i) = rng.normal();
    X -= X.dot(unit) * unit;
    X.normalize();
    const Eigen::VectorXd nu = ex.nu(unit);
    const Eigen::VectorXcd lhs = ambient_covariant(field, a * unit, X);
    const Eigen::VectorXcd rhs =
        intrinsic_covariant(dom, phi, unit, X) + 0.5 * gamma_s(rep, ex.weingarten(unit) * X, nu) * phi(unit);
    res.max = std::max(res.max, (lhs - rhs).norm());
    ++res.samples;
  }
  return res;
}

Eigen::MatrixXd energy_momentum_at(const ModelDomain& domain, const BoundarySpinorFn& phi, const Eigen::VectorXd& unit,
                                   double zero_threshold) {
  const CliffordRep& rep = domain.rep();
  const int n = rep.n();
  const Eigen::VectorXcd v = phi(unit);
  const double norm2 = v.squaredNorm();
  if (std::sqrt(norm2) < zero_threshold) {
    std::string where;
    for (Eigen::Index i = 0; i < unit.size(); ++i) where += (i ? ", " : "") + std::to_string(unit(i));
    throw Error(ErrorCode::ZeroLocus, "boundary spinor vanishes at node (" + where + ")");
  }
  const AdaptedFrame f = adapted_frame(rep, unit);
  const Eigen::VectorXd nu = f.rotation.col(n - 1);
  std::vector<Eigen::VectorXcd> cov;
  std::vector<Eigen::MatrixXcd> gs;
  for (int a = 0; a < n - 1; ++a) {
    cov.push_back(intrinsic_covariant(domain, phi, unit, f.rotation.col(a)));
    gs.push_back(gamma_s(rep, f.rotation.col(a), nu));
  }
  Eigen::MatrixXd T(n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      const Eigen::VectorXcd s = gs[std::size_t(a)] * cov[std::size_t(b)] + gs[std::size_t(b)] * cov[std::size_t(a)];
      T(a, b) = 0.5 * v.dot(s).real() / norm2;
    }
  return T;
}

}  // namespace spinlab
