// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/integrals.hpp"

#include <cmath>
#include "spinlab/operators.hpp"
#include "spinlab/random.hpp"

namespace spinlab {

Stencil identity_stencil(const ModelDomain& domain, const InteriorResolution& res) {
  return Stencil{domain.euclidean_radius() / res.fd_divisions, 4};
}

namespace {

struct BoundaryPairing {
  Complex dirac = 0;    // int <D psi, psi> (extrinsic, possibly twisted)
  double norm2 = 0;     // int |psi|^2
};

BoundaryPairing boundary_pairing(const InteriorField& field, const QuadratureRule& rule, const Stencil& stencil,
                                 double twist) {
  const ModelDomain& dom = field.domain();
  const CliffordRep& rep = dom.rep();
  const int n = dom.n();
  const double H = dom.mean_curvature();
  BoundaryPairing out;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const Eigen::VectorXd& x = rule.nodes[q];
    const Eigen::VectorXd nu = -rule.units[q];
    const Eigen::MatrixXd frame = tangent_frame(rule.units[q]);
    const Eigen::VectorXcd psi = field(x);
    const Eigen::MatrixXcd gnu = clifford_matrix(rep, nu);
    Eigen::VectorXcd d = 0.5 * (n - 1) * H * psi + Complex(0, twist) * (gnu * psi);
    for (int a = 0; a < n - 1; ++a)
      d += clifford_matrix(rep, Eigen::VectorXd(frame.col(a))) * (gnu * ambient_covariant(field, x, frame.col(a), stencil));
    const double w = rule.weights(Eigen::Index(q));
    out.dirac += w * psi.dot(d);
    out.norm2 += w * psi.squaredNorm();
  }
  return out;
}

}  // namespace

ReillyReport reilly_residual(const InteriorField& field) {
  return reilly_residual(field, field.domain().resolution().interior);
}

ReillyReport reilly_residual(const InteriorField& field, const InteriorResolution& res) {
  const ModelDomain& dom = field.domain();
  const CliffordRep& rep = dom.rep();
  const int n = dom.n();
  const Stencil st = identity_stencil(dom, res);
  const QuadratureRule inner = interior_rule(dom, res);
  const QuadratureRule outer = boundary_rule(dom, res);

  double grad = 0, dirac = 0, curv = 0;
  for (std::size_t q = 0; q < inner.nodes.size(); ++q) {
    const Eigen::VectorXd& x = inner.nodes[q];
    const double w = inner.weights(Eigen::Index(q));
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(rep.spinor_dim());
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXcd c = ambient_covariant(field, x, Eigen::VectorXd::Unit(n, k), st);
      grad += w * c.squaredNorm();
      d += rep.gamma(k) * c;
    }
    dirac += w * d.squaredNorm();
    curv += w * 0.25 * dom.scalar_curvature() * field(x).squaredNorm();
  }
  const BoundaryPairing bp = boundary_pairing(field, outer, st, 0.0);
  const double mean = 0.5 * (n - 1) * dom.mean_curvature() * bp.norm2;

  ReillyReport r;
  r.lhs_interior = grad - dirac + curv;
  r.rhs_boundary = bp.dirac.real() - mean;
  r.residual = std::abs(r.lhs_interior - r.rhs_boundary);
  r.terms = {{"gradient", grad},          {"dirac", dirac},   {"curvature", curv},
             {"boundary_dirac", bp.dirac.real()}, {"mean_curvature", mean}, {"boundary_imaginary", bp.dirac.imag()}};
  return r;
}

ReillyReport hyperbolic_reilly_residual(const InteriorField& field, Sign sign) {
  return hyperbolic_reilly_residual(field, sign, field.domain().resolution().interior);
}

ReillyReport hyperbolic_reilly_residual(const InteriorField& field, Sign sign, const InteriorResolution& res) {
  const ModelDomain& dom = field.domain();
  if (dom.kind() != DomainKind::HyperbolicBall)
    throw Error(ErrorCode::Precondition, "the twisted Reilly formula is checked on hyperbolic balls");
  const CliffordRep& rep = dom.rep();
  const int n = dom.n();
  const Stencil st = identity_stencil(dom, res);
  const QuadratureRule inner = interior_rule(dom, res);
  const QuadratureRule outer = boundary_rule(dom, res);
  const double shift = 0.5 * n * value(sign);

  double twistor = 0, dirac = 0, curv = 0;
  for (std::size_t q = 0; q < inner.nodes.size(); ++q) {
    const Eigen::VectorXd& x = inner.nodes[q];
    const double w = inner.weights(Eigen::Index(q));
    const Eigen::VectorXcd psi = field(x);
    std::vector<Eigen::VectorXcd> cov;
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(rep.spinor_dim());
    for (int k = 0; k < n; ++k) {
      cov.push_back(ambient_covariant(field, x, Eigen::VectorXd::Unit(n, k), st));
      d += rep.gamma(k) * cov.back();
    }
    for (int k = 0; k < n; ++k) twistor += w * (cov[std::size_t(k)] + rep.gamma(k) * d / double(n)).squaredNorm();
    dirac += w * (d - Complex(0, shift) * psi).squaredNorm();
    curv += w * 0.25 * dom.shifted_scalar_curvature() * psi.squaredNorm();
  }
  const BoundaryPairing bp = boundary_pairing(field, outer, st, 0.5 * (n - 1) * value(sign));
  const double mean = 0.5 * (n - 1) * dom.mean_curvature() * bp.norm2;
  const double factor = double(n - 1) / n;

  ReillyReport r;
  r.lhs_interior = twistor + curv - factor * dirac;
  r.rhs_boundary = bp.dirac.real() - mean;
  r.residual = std::abs(r.lhs_interior - r.rhs_boundary);
  r.terms = {{"twistor", twistor},
             {"dirac", factor * dirac},
             {"curvature", curv},
             {"boundary_dirac", bp.dirac.real()},
             {"mean_curvature", mean},
             {"boundary_imaginary", bp.dirac.imag()}};
  return r;
}

GreenReport green_residual(const InteriorField& field) {
  return green_residual(field, field.domain().resolution().interior);
}

GreenReport green_residual(const InteriorField& field, const InteriorResolution& res) {
  const ModelDomain& dom = field.domain();
  const CliffordRep& rep = dom.rep();
  const Stencil st = identity_stencil(dom, res);
  const QuadratureRule inner = interior_rule(dom, res);
  const QuadratureRule outer = boundary_rule(dom, res);
  GreenReport g;
  for (std::size_t q = 0; q < inner.nodes.size(); ++q) {
    const Eigen::VectorXcd psi = field(inner.nodes[q]);
    const Eigen::VectorXcd d = ambient_dirac_at(field, inner.nodes[q], st);
    g.lhs += inner.weights(Eigen::Index(q)) * (psi.dot(d) - d.dot(psi));
  }
  for (std::size_t q = 0; q < outer.nodes.size(); ++q) {
    const Eigen::VectorXcd psi = field(outer.nodes[q]);
    const Eigen::VectorXcd gpsi = clifford_matrix(rep, Eigen::VectorXd(-outer.units[q])) * psi;
    g.rhs -= outer.weights(Eigen::Index(q)) * psi.dot(gpsi);
  }
  g.residual = std::abs(g.lhs - g.rhs);
  g.real_part = std::abs(g.lhs.real()) + std::abs(g.rhs.real());
  return g;
}

EnergyMomentumReport energy_momentum(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                     const std::vector<Eigen::VectorXd>& units) {
  EnergyMomentumReport r;
  const ExtrinsicData ex = boundary_geometry(domain, 0);
  const int n = domain.n();
  for (const auto& u : units) {
    const Eigen::MatrixXd T = energy_momentum_at(domain, phi, u);
    const Eigen::MatrixXd A = ex.mean_curvature * Eigen::MatrixXd::Identity(n - 1, n - 1);
    r.weingarten_residual = std::max(r.weingarten_residual, (2 * T - A).cwiseAbs().maxCoeff());
    r.symmetry_residual = std::max(r.symmetry_residual, (T - T.transpose()).cwiseAbs().maxCoeff());
    r.units.push_back(u);
    r.tensors.push_back(T);
  }
  return r;
}

EnergyMomentumReport energy_momentum(const ModelDomain& domain, const BoundarySpinorFn& phi) {
  return energy_momentum(domain, phi, boundary_rule(domain, domain.resolution().interior).units);
}

PointResidual lichnerowicz_residual(const InteriorField& field, int samples, std::uint64_t seed) {
  const ModelDomain& dom = field.domain();
  if (dom.kind() != DomainKind::EuclideanBall)
    throw Error(ErrorCode::Unsupported, "the pointwise check uses the flat Laplacian");
  const int n = dom.n();
  const Stencil st{1e-3, 4};
  const InteriorField dpsi = ambient_dirac(field, st);
  SeededRng rng(seed);
  PointResidual res;
  const double h = st.step;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = rng.normal();
    x *= 0.9 * dom.euclidean_radius() * std::pow(rng.uniform(), 1.0 / n) / x.norm();
    const Eigen::VectorXcd d2 = ambient_dirac_at(dpsi, x, st);
    Eigen::VectorXcd lap = Eigen::VectorXcd::Zero(d2.size());
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd e = Eigen::VectorXd::Unit(n, k);
      lap += (-field(x + 2 * h * e) + 16.0 * field(x + h * e) - 30.0 * field(x) + 16.0 * field(x - h * e) -
              field(x - 2 * h * e)) /
             (12 * h * h);
    }
    const Eigen::VectorXcd rough = -lap + 0.25 * dom.scalar_curvature() * field(x);
    res.max = std::max(res.max, (d2 - rough).norm());
    ++res.samples;
  }
  return res;
}

}  // namespace spinlab
