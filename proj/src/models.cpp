// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/models.hpp"

#include <cmath>

#include "spinlab/random.hpp"

namespace spinlab {

std::string to_string(DomainKind kind) {
  return kind == DomainKind::EuclideanBall ? "euclidean-ball" : "hyperbolic-ball";
}

DomainKind domain_kind_from_string(const std::string& name) {
  if (name == "euclidean-ball") return DomainKind::EuclideanBall;
  if (name == "hyperbolic-ball") return DomainKind::HyperbolicBall;
  throw Error(ErrorCode::Usage, "unknown domain kind '" + name + "'");
}

ModelDomain::ModelDomain(DomainKind kind, int n, double radius, Resolution resolution)
    : kind_(kind), n_(n), radius_(radius), resolution_(resolution) {
  if (n < 2 || n > 8) throw Error(ErrorCode::InvalidDimension, "model domains support 2 <= n <= 8");
  if (!(radius > 0) || !std::isfinite(radius)) throw Error(ErrorCode::Precondition, "radius must be positive");
  rep_ = std::make_shared<const CliffordRep>(n);
}

double ModelDomain::scalar_curvature() const {
  return kind_ == DomainKind::EuclideanBall ? 0.0 : -double(n_) * (n_ - 1);
}

double ModelDomain::shifted_scalar_curvature() const {
  return kind_ == DomainKind::EuclideanBall ? 0.0 : scalar_curvature() + double(n_) * (n_ - 1);
}

double ModelDomain::ambient_sectional_curvature() const { return kind_ == DomainKind::EuclideanBall ? 0.0 : -1.0; }

double ModelDomain::euclidean_radius() const {
  return kind_ == DomainKind::EuclideanBall ? radius_ : std::tanh(radius_ / 2);
}

double ModelDomain::mean_curvature() const {
  return kind_ == DomainKind::EuclideanBall ? 1.0 / radius_ : 1.0 / std::tanh(radius_);
}

double ModelDomain::induced_radius() const {
  return kind_ == DomainKind::EuclideanBall ? radius_ : std::sinh(radius_);
}

double ModelDomain::conformal_factor(const Eigen::VectorXd& x) const {
  if (kind_ == DomainKind::EuclideanBall) return 1.0;
  return 2.0 / (1.0 - x.squaredNorm());
}

Eigen::MatrixXd ModelDomain::connection_form(const Eigen::VectorXd& x, const Eigen::VectorXd& X) const {
  if (x.size() != n_ || X.size() != n_) throw Error(ErrorCode::DimensionMismatch, "connection form needs n-vectors");
  if (kind_ == DomainKind::EuclideanBall) return Eigen::MatrixXd::Zero(n_, n_);
  // For g = e^{2u} delta and e_k = e^{-u} d_k: omega_kl(e_j) = e^{-u}(u_k delta_lj - u_l delta_kj),
  // and e^{-u} du = x on the Poincare ball.
  return x * X.transpose() - X * x.transpose();
}

Eigen::MatrixXcd ModelDomain::spin_connection(const Eigen::VectorXd& x, const Eigen::VectorXd& X) const {
  const int d = rep_->spinor_dim();
  if (kind_ == DomainKind::EuclideanBall) return Eigen::MatrixXcd::Zero(d, d);
  const Eigen::MatrixXd w = connection_form(x, X);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l)
      if (w(k, l) != 0.0) out += 0.25 * w(k, l) * rep_->gamma(k) * rep_->gamma(l);
  return out;
}

bool ModelDomain::contains(const Eigen::VectorXd& x, double slack) const {
  return x.norm() <= euclidean_radius() + slack;
}

bool ModelDomain::same_geometry(const ModelDomain& other) const {
  return kind_ == other.kind_ && n_ == other.n_ && radius_ == other.radius_;
}

ModelDomain make_domain(DomainKind kind, int n, double radius, const Resolution& resolution) {
  return ModelDomain(kind, n, radius, resolution);
}

double hyperbolic_radius_for_alpha(double alpha) {
  if (!(alpha > 1.0)) throw Error(ErrorCode::Precondition, "alpha must exceed 1");
  return std::atanh(1.0 / alpha);
}

Eigen::MatrixXd ExtrinsicData::weingarten(const Eigen::VectorXd& unit) const {
  const Eigen::Index n = unit.size();
  return mean_curvature * (Eigen::MatrixXd::Identity(n, n) - unit * unit.transpose());
}

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& unit) {
  const Eigen::Index n = unit.size();
  Eigen::MatrixXd frame(n, n - 1);
  Eigen::Index filled = 0;
  for (Eigen::Index axis = 0; axis < n && filled < n - 1; ++axis) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, axis);
    v -= unit.dot(v) * unit;
    for (Eigen::Index q = 0; q < filled; ++q) v -= frame.col(q).dot(v) * frame.col(q);
    if (v.norm() > 1e-6) frame.col(filled++) = v.normalized();
  }
  return frame;
}

namespace {

Eigen::VectorXd random_unit(SeededRng& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v.normalized();
}

Eigen::VectorXd random_tangent(SeededRng& rng, const Eigen::VectorXd& unit) {
  Eigen::VectorXd v(unit.size());
  for (Eigen::Index i = 0; i < unit.size(); ++i) v(i) = rng.normal();
  return v - unit.dot(v) * unit;
}

}  // namespace

ExtrinsicData boundary_geometry(const ModelDomain& domain, int samples, std::uint64_t seed) {
  ExtrinsicData ex;
  ex.mean_curvature = domain.mean_curvature();
  ex.induced_radius = domain.induced_radius();
  const int n = domain.n();
  const double rb = ex.induced_radius;
  const double k_intrinsic = 1.0 / (rb * rb);
  const double k_ambient = domain.ambient_sectional_curvature();

  SeededRng rng(seed);
  const double t = 1e-5;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd p = random_unit(rng, n);
    const Eigen::VectorXd X = random_tangent(rng, p);
    const Eigen::VectorXd Y = random_tangent(rng, p);
    const Eigen::VectorXd Z = random_tangent(rng, p);

    // Gauss: R(X,Y)Z of the round sphere against A-terms plus the ambient curvature term.
    const Eigen::MatrixXd A = ex.weingarten(p);
    const Eigen::VectorXd lhs = k_intrinsic * (Y.dot(Z) * X - X.dot(Z) * Y);
    const Eigen::VectorXd rhs = (A * Y).dot(Z) * (A * X) - (A * X).dot(Z) * (A * Y) +
                                k_ambient * (Y.dot(Z) * X - X.dot(Z) * Y);
    ex.gauss_codazzi.gauss = std::max(ex.gauss_codazzi.gauss, (lhs - rhs).norm());

    // Codazzi: covariant derivative of A along the sphere by centered differences,
    // with Y and X extended as tangential projections of constant vectors.
    auto nabla_A = [&](const Eigen::VectorXd& dir, const Eigen::VectorXd& arg) {
      const Eigen::VectorXd u = dir.normalized();
      auto field = [&](double tau) {
        Eigen::VectorXd q = std::cos(tau) * p + std::sin(tau) * u;
        Eigen::VectorXd a = arg - q.dot(arg) * q;
        return std::pair<Eigen::VectorXd, Eigen::VectorXd>{ex.weingarten(q) * a, a};
      };
      auto [ap, yp] = field(t);
      auto [am, ym] = field(-t);
      const double scale = dir.norm() / (2 * t * rb);
      const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - p * p.transpose();
      return Eigen::VectorXd(scale * (P * (ap - am) - A * (P * (yp - ym))));
    };
    if (X.norm() > 1e-8 && Y.norm() > 1e-8) {
      const Eigen::VectorXd codazzi = nabla_A(X, Y) - nabla_A(Y, X);
      ex.gauss_codazzi.codazzi = std::max(ex.gauss_codazzi.codazzi, codazzi.norm());
    }
  }
  ex.gauss_codazzi.samples = samples;
  return ex;
}

}  // namespace spinlab
