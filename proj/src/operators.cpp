// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/operators.hpp"

#include <cmath>

namespace spinlab {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::ExtrinsicDirac: return "extrinsic-dirac";
    case OperatorKind::TwistedExtrinsic: return "twisted-extrinsic";
    case OperatorKind::AmbientDirac: return "ambient-dirac";
    case OperatorKind::MitProjection: return "mit-projection";
    case OperatorKind::ChiralityProjection: return "chirality-projection";
    case OperatorKind::NormalClifford: return "normal-clifford";
    case OperatorKind::Chirality: return "chirality";
    case OperatorKind::Composite: return "composite";
  }
  return "unknown";
}

OperatorMatrix::OperatorMatrix(OperatorKind kind, ModelDomain domain, std::shared_ptr<const BoundaryBasis> basis,
                               std::vector<Eigen::MatrixXcd> blocks, int sign)
    : kind_(kind), domain_(std::move(domain)), basis_(std::move(basis)), blocks_(std::move(blocks)), sign_(sign) {
  const auto& sectors = basis_->sectors();
  if (blocks_.size() != sectors.size()) throw Error(ErrorCode::BasisMismatch, "one block per sector expected");
  for (std::size_t s = 0; s < sectors.size(); ++s)
    if (blocks_[s].rows() != sectors[s].size() || blocks_[s].cols() != sectors[s].size())
      throw Error(ErrorCode::DimensionMismatch, "block size does not match its sector");
}

Eigen::MatrixXcd OperatorMatrix::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size(), size());
  const auto& sectors = basis_->sectors();
  for (std::size_t s = 0; s < sectors.size(); ++s)
    out.block(sectors[s].offset, sectors[s].offset, sectors[s].size(), sectors[s].size()) = blocks_[s];
  return out;
}

Eigen::VectorXcd OperatorMatrix::apply(const Eigen::VectorXcd& c) const {
  if (c.size() != size()) throw Error(ErrorCode::DimensionMismatch, "coefficient vector does not match operator");
  Eigen::VectorXcd out(c.size());
  const auto& sectors = basis_->sectors();
  for (std::size_t s = 0; s < sectors.size(); ++s)
    out.segment(sectors[s].offset, sectors[s].size()) = blocks_[s] * c.segment(sectors[s].offset, sectors[s].size());
  return out;
}

BoundaryField OperatorMatrix::apply(const BoundaryField& field) const {
  if (!basis_->compatible(field.basis())) throw Error(ErrorCode::BasisMismatch, "field and operator bases differ");
  if (!domain_.same_geometry(field.domain())) throw Error(ErrorCode::BasisMismatch, "field lives on another domain");
  return BoundaryField(domain_, basis_, apply(field.coefficients()));
}

double OperatorMatrix::norm() const {
  double acc = 0;
  for (const auto& b : blocks_) acc += b.squaredNorm();
  return std::sqrt(acc);
}

double OperatorMatrix::hermiticity_residual() const {
  double acc = 0;
  for (const auto& b : blocks_) acc += (b - b.adjoint()).squaredNorm();
  return std::sqrt(acc);
}

void OperatorMatrix::require_compatible(const OperatorMatrix& other) const {
  if (!basis_->compatible(*other.basis_) || !domain_.same_geometry(other.domain_))
    throw Error(ErrorCode::BasisMismatch, "operators act on different boundary bases");
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& other) const {
  require_compatible(other);
  std::vector<Eigen::MatrixXcd> out;
  for (std::size_t s = 0; s < blocks_.size(); ++s) out.push_back(blocks_[s] * other.blocks_[s]);
  return OperatorMatrix(OperatorKind::Composite, domain_, basis_, std::move(out));
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& other) const {
  require_compatible(other);
  std::vector<Eigen::MatrixXcd> out;
  for (std::size_t s = 0; s < blocks_.size(); ++s) out.push_back(blocks_[s] + other.blocks_[s]);
  return OperatorMatrix(OperatorKind::Composite, domain_, basis_, std::move(out));
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  require_compatible(other);
  std::vector<Eigen::MatrixXcd> out;
  for (std::size_t s = 0; s < blocks_.size(); ++s) out.push_back(blocks_[s] - other.blocks_[s]);
  return OperatorMatrix(OperatorKind::Composite, domain_, basis_, std::move(out));
}

OperatorMatrix operator*(Complex a, const OperatorMatrix& op) {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& b : op.blocks_) out.push_back(a * b);
  return OperatorMatrix(OperatorKind::Composite, op.domain_, op.basis_, std::move(out));
}

OperatorMatrix OperatorMatrix::identity_like() const {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& b : blocks_) out.push_back(Eigen::MatrixXcd::Identity(b.rows(), b.cols()));
  return OperatorMatrix(OperatorKind::Composite, domain_, basis_, std::move(out));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return OperatorMatrix(OperatorKind::Composite, domain_, basis_, std::move(out), sign_);
}

namespace {

using PointAction = std::function<Eigen::VectorXcd(const Jet&, const Eigen::VectorXd& unit)>;

// Galerkin blocks <phi_a, L phi_b> by sector quadrature, plus the largest
// L2 norm of L phi_b outside the span of its sector.
OperatorMatrix assemble(OperatorKind kind, const ModelDomain& domain, const Truncation& truncation,
                        const PointAction& action, int sign = 0) {
  auto basis = make_boundary_basis(domain, truncation);
  std::vector<Eigen::VectorXd> units;
  Eigen::VectorXd weights;
  basis->sector_quadrature(units, weights);
  const std::size_t q = units.size();

  std::vector<Eigen::MatrixXcd> blocks;
  double closure = 0;
  for (const auto& s : basis->sectors()) {
    const Eigen::Index m = s.size();
    // values and images stacked per node: rows (node, component)
    Eigen::MatrixXcd V(Eigen::Index(2 * q), m), W(Eigen::Index(2 * q), m);
    for (Eigen::Index b = 0; b < m; ++b)
      for (std::size_t k = 0; k < q; ++k) {
        const Jet j = basis->jet(s, s.modes[std::size_t(b)], units[k]);
        const double sw = std::sqrt(weights(Eigen::Index(k)));
        V.block(Eigen::Index(2 * k), b, 2, 1) = sw * j.value;
        W.block(Eigen::Index(2 * k), b, 2, 1) = sw * action(j, units[k]);
      }
    Eigen::MatrixXcd block = V.adjoint() * W;
    const Eigen::MatrixXcd defect = W - V * block;
    for (Eigen::Index b = 0; b < m; ++b) closure = std::max(closure, defect.col(b).norm());
    blocks.push_back(std::move(block));
  }
  OperatorMatrix op(kind, domain, basis, std::move(blocks), sign);
  op.set_closure_residual(closure);
  return op;
}

Eigen::VectorXcd extrinsic_dirac_jet(const ModelDomain& domain, const Jet& jet, const Eigen::VectorXd& unit) {
  const CliffordRep& rep = domain.rep();
  const int n = domain.n();
  const Eigen::VectorXd x = domain.euclidean_radius() * unit;
  const Eigen::VectorXd nu = -unit;
  const double rb = domain.induced_radius();
  Eigen::VectorXcd out = 0.5 * (n - 1) * domain.mean_curvature() * jet.value;
  for (int a = 0; a < n - 1; ++a) {
    const Eigen::VectorXd t = jet.tangents.col(a);
    const Eigen::VectorXcd cov = jet.derivatives[std::size_t(a)] / rb + domain.spin_connection(x, t) * jet.value;
    out += gamma_s(rep, t, nu) * cov;
  }
  return out;
}

void require_boundary_dimension(const ModelDomain& domain) {
  if (domain.n() != 2 && domain.n() != 3)
    throw Error(ErrorCode::Unsupported, "discretized boundary operators support n = 2, 3 only");
}

}  // namespace

OperatorMatrix assemble_extrinsic_dirac(const ModelDomain& domain) {
  return assemble_extrinsic_dirac(domain, domain.resolution().boundary);
}

OperatorMatrix assemble_extrinsic_dirac(const ModelDomain& domain, const Truncation& truncation) {
  require_boundary_dimension(domain);
  return assemble(OperatorKind::ExtrinsicDirac, domain, truncation,
                  [&](const Jet& j, const Eigen::VectorXd& u) { return extrinsic_dirac_jet(domain, j, u); });
}

OperatorMatrix normal_clifford(const ModelDomain& domain) { return normal_clifford(domain, domain.resolution().boundary); }

OperatorMatrix normal_clifford(const ModelDomain& domain, const Truncation& truncation) {
  require_boundary_dimension(domain);
  const CliffordRep& rep = domain.rep();
  return assemble(OperatorKind::NormalClifford, domain, truncation, [&](const Jet& j, const Eigen::VectorXd& u) {
    return Eigen::VectorXcd(clifford_matrix(rep, Eigen::VectorXd(-u)) * j.value);
  });
}

OperatorMatrix chirality_operator(const ModelDomain& domain) {
  return chirality_operator(domain, domain.resolution().boundary);
}

OperatorMatrix chirality_operator(const ModelDomain& domain, const Truncation& truncation) {
  require_boundary_dimension(domain);
  const Eigen::MatrixXcd G = domain.rep().volume_element();
  return assemble(OperatorKind::Chirality, domain, truncation,
                  [G](const Jet& j, const Eigen::VectorXd&) { return Eigen::VectorXcd(G * j.value); });
}

OperatorMatrix mit_projection(const ModelDomain& domain, Sign sign) {
  return mit_projection(domain, sign, domain.resolution().boundary);
}

OperatorMatrix mit_projection(const ModelDomain& domain, Sign sign, const Truncation& truncation) {
  const OperatorMatrix N = normal_clifford(domain, truncation);
  const OperatorMatrix P = 0.5 * (N.identity_like() + Complex(0, value(sign)) * N);
  return OperatorMatrix(OperatorKind::MitProjection, domain, N.basis_handle(), P.blocks(), value(sign));
}

OperatorMatrix chirality_projection(const ModelDomain& domain, Sign sign) {
  return chirality_projection(domain, sign, domain.resolution().boundary);
}

OperatorMatrix chirality_projection(const ModelDomain& domain, Sign sign, const Truncation& truncation) {
  if (!domain.rep().has_chirality())
    throw Error(ErrorCode::Unsupported, "chirality boundary condition needs even n");
  const OperatorMatrix N = normal_clifford(domain, truncation);
  const OperatorMatrix G = chirality_operator(domain, truncation);
  const OperatorMatrix B = 0.5 * (N.identity_like() + Complex(value(sign)) * (N * G));
  return OperatorMatrix(OperatorKind::ChiralityProjection, domain, N.basis_handle(), B.blocks(), value(sign));
}

OperatorMatrix assemble_twisted_dirac(const ModelDomain& domain, Sign sign) {
  return assemble_twisted_dirac(domain, sign, domain.resolution().boundary);
}

OperatorMatrix assemble_twisted_dirac(const ModelDomain& domain, Sign sign, const Truncation& truncation) {
  const OperatorMatrix D = assemble_extrinsic_dirac(domain, truncation);
  const OperatorMatrix N = normal_clifford(domain, truncation);
  const OperatorMatrix T = D + Complex(0, 0.5 * (domain.n() - 1) * value(sign)) * N;
  OperatorMatrix out(OperatorKind::TwistedExtrinsic, domain, D.basis_handle(), T.blocks(), value(sign));
  out.set_closure_residual(std::max(D.closure_residual(), N.closure_residual()));
  return out;
}

Eigen::VectorXcd covariant_derivative(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                                      const Stencil& stencil) {
  if (X.size() != field.domain().n()) throw Error(ErrorCode::DimensionMismatch, "direction has wrong dimension");
  return ambient_covariant(field, x, X, stencil);
}

Eigen::VectorXcd ambient_dirac_at(const InteriorField& field, const Eigen::VectorXd& x, const Stencil& stencil) {
  const CliffordRep& rep = field.domain().rep();
  const int n = rep.n();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rep.spinor_dim());
  for (int k = 0; k < n; ++k) out += rep.gamma(k) * ambient_covariant(field, x, Eigen::VectorXd::Unit(n, k), stencil);
  return out;
}

Eigen::VectorXcd twisted_dirac_at(const InteriorField& field, Sign sign, const Eigen::VectorXd& x,
                                  const Stencil& stencil) {
  const double shift = 0.5 * field.domain().n() * value(sign);
  return ambient_dirac_at(field, x, stencil) - Complex(0, shift) * field(x);
}

Eigen::VectorXcd twistor_at(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                            const Stencil& stencil) {
  const CliffordRep& rep = field.domain().rep();
  return ambient_covariant(field, x, X, stencil) +
         clifford_matrix(rep, X) * ambient_dirac_at(field, x, stencil) / double(rep.n());
}

InteriorField covariant_derivative(const InteriorField& field,
                                   std::function<Eigen::VectorXd(const Eigen::VectorXd&)> direction,
                                   const Stencil& stencil) {
  auto eval = [field, direction, stencil](const Eigen::VectorXd& x) {
    return covariant_derivative(field, x, direction(x), stencil);
  };
  return InteriorField(field.domain(), InteriorField::Basis::ClosedForm, eval);
}

InteriorField ambient_dirac(const InteriorField& field, const Stencil& stencil) {
  auto eval = [field, stencil](const Eigen::VectorXd& x) { return ambient_dirac_at(field, x, stencil); };
  return InteriorField(field.domain(), InteriorField::Basis::ClosedForm, eval);
}

InteriorField twisted_dirac(const InteriorField& field, Sign sign, const Stencil& stencil) {
  auto eval = [field, sign, stencil](const Eigen::VectorXd& x) { return twisted_dirac_at(field, sign, x, stencil); };
  return InteriorField(field.domain(), InteriorField::Basis::ClosedForm, eval);
}

InteriorField twistor_operator(const InteriorField& field,
                               std::function<Eigen::VectorXd(const Eigen::VectorXd&)> direction,
                               const Stencil& stencil) {
  auto eval = [field, direction, stencil](const Eigen::VectorXd& x) {
    return twistor_at(field, x, direction(x), stencil);
  };
  return InteriorField(field.domain(), InteriorField::Basis::ClosedForm, eval);
}

Eigen::VectorXcd extrinsic_dirac_at(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                    const Eigen::VectorXd& unit) {
  const CliffordRep& rep = domain.rep();
  const int n = domain.n();
  const Eigen::MatrixXd frame = tangent_frame(unit);
  const Eigen::VectorXd nu = -unit;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rep.spinor_dim());
  for (int a = 0; a < n - 1; ++a)
    out += gamma_s(rep, frame.col(a), nu) * intrinsic_covariant(domain, phi, unit, frame.col(a));
  return out;
}

PointResidual dirac_bord_residual(const InteriorField& field, int samples, std::uint64_t seed, double normal_step) {
  const ModelDomain& dom = field.domain();
  const CliffordRep& rep = dom.rep();
  const int n = dom.n();
  const double a = dom.euclidean_radius();
  const double H = dom.mean_curvature();
  const BoundarySpinorFn phi = [&](const Eigen::VectorXd& u) { return field(a * u); };

  PointResidual res;
  for (const auto& unit : boundary_samples(n, samples, seed)) {
    const Eigen::VectorXd x = a * unit;
    const Eigen::VectorXd nu = -unit;
    const Eigen::VectorXcd psi = field(x);
    // one-sided inward derivative; nu in orthonormal components is nu / s in model coordinates
    const Eigen::VectorXcd dnu =
        forward_derivative(field, x, nu, normal_step) / dom.conformal_factor(x) + dom.spin_connection(x, nu) * psi;
    const Eigen::VectorXcd lhs = extrinsic_dirac_at(dom, phi, unit);
    const Eigen::VectorXcd rhs =
        0.5 * (n - 1) * H * psi - clifford_matrix(rep, nu) * ambient_dirac_at(field, x) - dnu;
    res.max = std::max(res.max, (lhs - rhs).norm());
    ++res.samples;
  }
  return res;
}

}  // namespace spinlab
