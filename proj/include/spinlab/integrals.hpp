// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "spinlab/fields.hpp"
#include "spinlab/frames.hpp"
#include "spinlab/quadrature.hpp"

namespace spinlab {

struct ReillyReport {
  double lhs_interior = 0;
  double rhs_boundary = 0;
  double residual = 0;
  /// Interior and boundary pieces, plus "boundary_imaginary": the integral of
  /// the imaginary part of the boundary pairing, kept as a diagnostic.
  std::map<std::string, double> terms;
};

/// Finite-difference stencil used by the integral identities at a given resolution.
Stencil identity_stencil(const ModelDomain& domain, const InteriorResolution& res);

/// int |nabla psi|^2 - |D psi|^2 + R/4 |psi|^2 against
/// int_boundary Re<D psi, psi> - (n-1)/2 H |psi|^2 (extrinsic D on the right).
ReillyReport reilly_residual(const InteriorField& field);
ReillyReport reilly_residual(const InteriorField& field, const InteriorResolution& res);

/// int |P psi|^2 + R~/4 |psi|^2 - (n-1)/n |D(+-) psi|^2 against
/// int_boundary Re<D(+-) psi, psi> - (n-1)/2 H |psi|^2 with the twisted operators.
ReillyReport hyperbolic_reilly_residual(const InteriorField& field, Sign sign);
ReillyReport hyperbolic_reilly_residual(const InteriorField& field, Sign sign, const InteriorResolution& res);

struct GreenReport {
  Complex lhs = 0;  // int <D psi, psi> - <psi, D psi>
  Complex rhs = 0;  // -int_boundary <gamma(nu) psi, psi>
  double residual = 0;
  /// |Re lhs| + |Re rhs|; both sides are purely imaginary.
  double real_part = 0;
};

GreenReport green_residual(const InteriorField& field);
GreenReport green_residual(const InteriorField& field, const InteriorResolution& res);

struct EnergyMomentumReport {
  std::vector<Eigen::VectorXd> units;
  std::vector<Eigen::MatrixXd> tensors;  // in the adapted tangent frame
  double weingarten_residual = 0;        // max |2T - A|
  double symmetry_residual = 0;
};

EnergyMomentumReport energy_momentum(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                     const std::vector<Eigen::VectorXd>& units);
/// Samples the boundary nodes of the domain's interior resolution.
EnergyMomentumReport energy_momentum(const ModelDomain& domain, const BoundarySpinorFn& phi);

/// D^2 psi against nabla^* nabla psi + R/4 psi at interior nodes; Euclidean domains.
PointResidual lichnerowicz_residual(const InteriorField& field, int samples, std::uint64_t seed);

}  // namespace spinlab
