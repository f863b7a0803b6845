// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spinlab/boundary.hpp"
#include "spinlab/fields.hpp"
#include "spinlab/operators.hpp"

namespace spinlab {

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // ordered by |lambda|, then lambda
  std::vector<BoundaryField> eigenvectors;
  /// Eigenvalues above this magnitude are truncation-dominated.
  double cutoff = 0;
  OperatorKind kind = OperatorKind::ExtrinsicDirac;
  int sign = 0;
  double max_residual = 0;
};

/// k eigenpairs of a Hermitian boundary operator nearest zero (all when k <= 0),
/// solved block by block. Throws ConventionViolation when the operator is not
/// Hermitian to 1e-10.
SpectrumResult spectrum(const OperatorMatrix& op, int k = -1);

/// Smallest positive eigenvalue.
double first_positive_eigenvalue(const SpectrumResult& s);

enum class ConditionKind { Mit, Chirality };

struct BoundaryCondition {
  ConditionKind kind = ConditionKind::Mit;
  Sign sign = Sign::Plus;
};

std::string to_string(const BoundaryCondition& c);
BoundaryCondition boundary_condition_from_string(const std::string& name);

/// Solution of D Psi = 0 (MIT) or of the twisted equation paired with the
/// chirality condition (CHI+ with D(-), CHI- with D(+)) on a 2-dimensional
/// model disk, with the projected trace of Psi equal to the projected data.
/// Solved per Fourier sector with a convergent power series in |z|^2.
InteriorField extend_harmonic(const ModelDomain& domain, const BoundaryField& data, BoundaryCondition condition);

/// Interior field sum_m c_m Psi_m from per-sector coefficients (the form
/// returned by extend_harmonic); used to rebuild serialized extensions.
InteriorField mode_expansion_field(const ModelDomain& domain, const Truncation& truncation,
                                   BoundaryCondition condition, const Eigen::VectorXcd& coefficients);

/// Interior sign s in D Psi = s i Psi solved by the extension under `condition`.
int extension_eigen_sign(BoundaryCondition condition);

struct RigidityThresholds {
  double boundary_dirac = 1e-7;   // relative to ||Phi||
  double extension_dirac = 1e-8;
  double boundary_match = 1e-8;
  double parallelism = 1e-6;      // relative to sup |Psi|
  double mean_curvature = 1e-10;
  double noise = 1e-2;            // negative-control perturbation, relative to ||Phi||
};

struct RigidityReport {
  double boundary_dirac_residual = 0;
  double extension_dirac_residual = 0;
  double boundary_match_residual = 0;
  double parallelism_residual = 0;
  double H0_equals_H_residual = 0;
  double trace_match_residual = 0;
  double phi_norm = 0;
  double psi_sup = 0;
  double control_boundary_dirac_residual = 0;
  bool control_pass = false;
  bool pass = false;
  RigidityThresholds thresholds;
};

using BoundaryScalarFn = std::function<double(const Eigen::VectorXd&)>;

/// Flat pipeline: hypothesis D Phi = (n-1)/2 H0 Phi, MIT extension, parallelism of the extension.
RigidityReport rigidity_experiment(const ModelDomain& domain, const BoundaryField& data, const BoundaryScalarFn& H0,
                                   Sign mit_sign = Sign::Plus, const RigidityThresholds& thresholds = {},
                                   std::uint64_t seed = 1);

/// Hyperbolic pipeline with twisted operators and the chirality condition;
/// the parallelism residual becomes the imaginary Killing residual with constant -sign i/2.
RigidityReport hyperbolic_rigidity_experiment(const ModelDomain& domain, const BoundaryField& data,
                                              const BoundaryScalarFn& H0, Sign sign,
                                              const RigidityThresholds& thresholds = {}, std::uint64_t seed = 1);

struct HmrReport {
  double lambda1 = 0;
  double bound = 0;
  double gap = 0;
  bool equality = false;
};

HmrReport hmr_bound_check(const ModelDomain& domain, Sign sign, double tol = 1e-6);

struct PsiPmResult {
  BoundaryField field;
  double eigenvalue = 0;
  double residual = 0;
};

/// Psi(+-) = Psi +- (alpha - sqrt(alpha^2 - 1)) i gamma(nu) Psi from a
/// constant spinor Psi on the geodesic sphere with coth(rho) = alpha.
PsiPmResult psi_pm_construct(const ModelDomain& domain, double alpha, Sign sign, std::uint64_t seed = 1);
PsiPmResult psi_pm_construct(int n, double alpha, Sign sign, const Resolution& resolution = {},
                             std::uint64_t seed = 1);

/// Seeded perturbation of the coefficients with relative L2 size `relative`.
BoundaryField perturb(const BoundaryField& field, double relative, std::uint64_t seed);

/// Coefficients of the pointwise product f Phi in the basis of Phi.
Eigen::VectorXcd multiply_boundary(const BoundaryField& field, const BoundaryScalarFn& f);

}  // namespace spinlab
