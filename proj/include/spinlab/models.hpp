// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <string>

#include "spinlab/clifford.hpp"

namespace spinlab {

using Complex = std::complex<double>;

enum class DomainKind { EuclideanBall, HyperbolicBall };

std::string to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

/// Truncation of the boundary bases. On S^1 the sectors are indexed by
/// m in [-fourier_modes/2, fourier_modes/2); on S^2 the theta quadrature has
/// theta_nodes Gauss-Legendre nodes and spinor harmonics are kept for total
/// angular momentum j <= theta_nodes/2 - 1/2.
struct Truncation {
  int fourier_modes = 64;
  int theta_nodes = 48;

  int max_degree() const { return theta_nodes / 2; }
};

/// Interior quadrature and finite-difference resolution. The differentiation
/// step used by the integral identities is euclidean_radius / fd_divisions.
struct InteriorResolution {
  int radial_nodes = 16;
  int angular_nodes = 32;
  int polar_nodes = 16;
  int fd_divisions = 64;

  InteriorResolution refined() const {
    return {2 * radial_nodes, 2 * angular_nodes, 2 * polar_nodes, 2 * fd_divisions};
  }
};

struct Resolution {
  Truncation boundary;
  InteriorResolution interior;
};

/// A Euclidean ball of radius r or a geodesic ball of radius rho in the
/// Poincare model of H^n (metric 4(1-|x|^2)^{-2} delta). Points are always
/// given in the Euclidean coordinates of the model; spinors are expressed in
/// the (conformally rescaled) Cartesian orthonormal frame.
class ModelDomain {
 public:
  ModelDomain(DomainKind kind, int n, double radius, Resolution resolution = {});

  DomainKind kind() const { return kind_; }
  int n() const { return n_; }
  /// r for the Euclidean ball, geodesic radius rho for the hyperbolic ball.
  double radius() const { return radius_; }
  const Resolution& resolution() const { return resolution_; }
  const CliffordRep& rep() const { return *rep_; }
  std::shared_ptr<const CliffordRep> rep_handle() const { return rep_; }

  double scalar_curvature() const;
  /// R + n(n-1) for the hyperbolic ball, R otherwise.
  double shifted_scalar_curvature() const;
  double ambient_sectional_curvature() const;
  /// Radius of the domain in model coordinates: r, or tanh(rho/2).
  double euclidean_radius() const;
  double mean_curvature() const;
  double induced_radius() const;

  /// Metric g = factor^2 delta; factor is 1 or 2/(1-|x|^2).
  double conformal_factor(const Eigen::VectorXd& x) const;
  /// Levi-Civita connection 1-form of the orthonormal frame evaluated on the
  /// frame vector X: omega_kl(X) = g(nabla_X e_k, e_l).
  Eigen::MatrixXd connection_form(const Eigen::VectorXd& x, const Eigen::VectorXd& X) const;
  /// Spin connection term Omega_X = 1/4 sum omega_kl(X) gamma_k gamma_l so
  /// that nabla_X psi = X(psi) + Omega_X psi.
  Eigen::MatrixXcd spin_connection(const Eigen::VectorXd& x, const Eigen::VectorXd& X) const;

  bool contains(const Eigen::VectorXd& x, double slack = 0.0) const;
  bool same_geometry(const ModelDomain& other) const;

 private:
  DomainKind kind_;
  int n_;
  double radius_;
  Resolution resolution_;
  std::shared_ptr<const CliffordRep> rep_;
};

ModelDomain make_domain(DomainKind kind, int n, double radius, const Resolution& resolution = {});

/// Geodesic radius rho with coth(rho) = alpha (alpha > 1).
double hyperbolic_radius_for_alpha(double alpha);

struct GaussCodazziResidual {
  double codazzi = 0;
  double gauss = 0;
  int samples = 0;
};

/// Extrinsic data of the boundary sphere. nu points inward, A = -nabla nu.
struct ExtrinsicData {
  double mean_curvature = 0;
  double induced_radius = 0;
  GaussCodazziResidual gauss_codazzi;

  /// Inward unit normal at the boundary point with model-coordinate direction `unit`.
  Eigen::VectorXd nu(const Eigen::VectorXd& unit) const { return -unit; }
  /// Weingarten map as an n x n matrix acting on the tangent space.
  Eigen::MatrixXd weingarten(const Eigen::VectorXd& unit) const;
};

ExtrinsicData boundary_geometry(const ModelDomain& domain, int samples = 100, std::uint64_t seed = 7);

/// Orthonormal basis of the tangent space of the unit sphere at `unit`
/// (columns), completed by Gram-Schmidt from the coordinate axes.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& unit);

}  // namespace spinlab
