// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "spinlab/fields.hpp"
#include "spinlab/models.hpp"

namespace spinlab {

/// Boundary spinor as a function of the unit direction, in Cartesian components.
using BoundarySpinorFn = std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>;

/// Orthonormal frame (E_1, ..., E_{n-1}, nu) along the boundary sphere and
/// a spin lift S of it: S gamma_a S^{-1} = sum_k R_ka gamma_k. On S^1 the
/// frame is (T, nu); on S^2 it is (e_phi, e_theta, nu), singular at the poles.
struct AdaptedFrame {
  Eigen::MatrixXd rotation;  // R, columns E_a in Cartesian components
  Eigen::MatrixXcd lift;     // S
  Eigen::MatrixXcd lift_inverse;
};

AdaptedFrame adapted_frame(const CliffordRep& rep, const Eigen::VectorXd& unit);

/// max |R_lk + tr(gamma_l S gamma_k S^{-1}) / dim| over l, k.
double lift_residual(const CliffordRep& rep, const AdaptedFrame& frame);

/// Ambient covariant derivative nabla_X psi of an interior field at x, with
/// X given in orthonormal-frame components. Centered differences.
Eigen::VectorXcd ambient_covariant(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                                   const Stencil& stencil = {});

/// Intrinsic spin connection nabla^S_X Phi of the boundary sphere at `unit`,
/// computed in the adapted frame and returned in Cartesian components.
/// X is a unit-speed tangent (orthonormal components); step is in
/// unit-sphere arclength.
Eigen::VectorXcd intrinsic_covariant(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                     const Eigen::VectorXd& unit, const Eigen::VectorXd& X, double step = 1e-4);

/// gamma^S(X) = gamma(X) gamma(nu) as a matrix in Cartesian components.
Eigen::MatrixXcd gamma_s(const CliffordRep& rep, const Eigen::VectorXd& X, const Eigen::VectorXd& nu);

struct PointResidual {
  double max = 0;
  int samples = 0;
};

/// Spinorial Gauss formula nabla_X = nabla^S_X + 1/2 gamma^S(A X) on random
/// boundary points and tangent directions.
PointResidual gauss_formula_residual(const InteriorField& field, int samples, std::uint64_t seed);

/// Energy-momentum tensor of a boundary spinor in the tangent part of the adapted frame:
/// T(X,Y) = 1/2 Re< gamma^S(X) nabla^S_Y Phi + gamma^S(Y) nabla^S_X Phi, Phi > / |Phi|^2.
/// Throws ZeroLocus when |Phi| < zero_threshold.
Eigen::MatrixXd energy_momentum_at(const ModelDomain& domain, const BoundarySpinorFn& phi, const Eigen::VectorXd& unit,
                                   double zero_threshold = 1e-8);

/// Boundary sample directions avoiding the poles of the S^2 chart.
std::vector<Eigen::VectorXd> boundary_samples(int n, int count, std::uint64_t seed);

}  // namespace spinlab
