// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "spinlab/boundary.hpp"
#include "spinlab/fields.hpp"
#include "spinlab/frames.hpp"
#include "spinlab/models.hpp"

namespace spinlab {

enum class OperatorKind {
  ExtrinsicDirac,
  TwistedExtrinsic,
  AmbientDirac,
  MitProjection,
  ChiralityProjection,
  NormalClifford,
  Chirality,
  Composite
};

std::string to_string(OperatorKind kind);

/// Boundary operator stored as one dense block per sector of its basis.
class OperatorMatrix {
 public:
  OperatorMatrix(OperatorKind kind, ModelDomain domain, std::shared_ptr<const BoundaryBasis> basis,
                 std::vector<Eigen::MatrixXcd> blocks, int sign = 0);

  OperatorKind kind() const { return kind_; }
  const ModelDomain& domain() const { return domain_; }
  const BoundaryBasis& basis() const { return *basis_; }
  std::shared_ptr<const BoundaryBasis> basis_handle() const { return basis_; }
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }
  int sign() const { return sign_; }
  Eigen::Index size() const { return basis_->size(); }

  /// Largest L2 defect of the sector assumption observed during assembly.
  double closure_residual() const { return closure_residual_; }
  void set_closure_residual(double r) { closure_residual_ = r; }

  Eigen::MatrixXcd dense() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& coefficients) const;
  BoundaryField apply(const BoundaryField& field) const;

  /// Frobenius norm of the full matrix.
  double norm() const;
  /// Frobenius norm of A - A^H.
  double hermiticity_residual() const;

  OperatorMatrix operator*(const OperatorMatrix& other) const;
  OperatorMatrix operator+(const OperatorMatrix& other) const;
  OperatorMatrix operator-(const OperatorMatrix& other) const;
  friend OperatorMatrix operator*(Complex a, const OperatorMatrix& op);

  OperatorMatrix identity_like() const;
  OperatorMatrix adjoint() const;

 private:
  void require_compatible(const OperatorMatrix& other) const;

  OperatorKind kind_;
  ModelDomain domain_;
  std::shared_ptr<const BoundaryBasis> basis_;
  std::vector<Eigen::MatrixXcd> blocks_;
  int sign_;
  double closure_residual_ = 0;
};

/// Extrinsic Dirac operator D = sum_j gamma(e_j) gamma(nu) nabla_{e_j} + (n-1)/2 H
/// of the boundary sphere. Uses the domain's boundary truncation unless one is given.
OperatorMatrix assemble_extrinsic_dirac(const ModelDomain& domain);
OperatorMatrix assemble_extrinsic_dirac(const ModelDomain& domain, const Truncation& truncation);

OperatorMatrix normal_clifford(const ModelDomain& domain);
OperatorMatrix normal_clifford(const ModelDomain& domain, const Truncation& truncation);

/// Chirality G (the volume element) on boundary spinors; even n only.
OperatorMatrix chirality_operator(const ModelDomain& domain);
OperatorMatrix chirality_operator(const ModelDomain& domain, const Truncation& truncation);

/// P(+-) = 1/2 (Id +- i gamma(nu)).
OperatorMatrix mit_projection(const ModelDomain& domain, Sign sign);
OperatorMatrix mit_projection(const ModelDomain& domain, Sign sign, const Truncation& truncation);

/// B(+-) = 1/2 (Id +- gamma(nu) G); even n only.
OperatorMatrix chirality_projection(const ModelDomain& domain, Sign sign);
OperatorMatrix chirality_projection(const ModelDomain& domain, Sign sign, const Truncation& truncation);

/// D(+-) = D +- (n-1)/2 i gamma(nu).
OperatorMatrix assemble_twisted_dirac(const ModelDomain& domain, Sign sign);
OperatorMatrix assemble_twisted_dirac(const ModelDomain& domain, Sign sign, const Truncation& truncation);

/// Pointwise interior operators. Derivatives use the given stencil in model coordinates.
Eigen::VectorXcd covariant_derivative(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                                      const Stencil& stencil = {});
Eigen::VectorXcd ambient_dirac_at(const InteriorField& field, const Eigen::VectorXd& x, const Stencil& stencil = {});
/// D(+-) psi = D psi -+ (n/2) i psi.
Eigen::VectorXcd twisted_dirac_at(const InteriorField& field, Sign sign, const Eigen::VectorXd& x,
                                  const Stencil& stencil = {});
/// P_X psi = nabla_X psi + (1/n) gamma(X) D psi.
Eigen::VectorXcd twistor_at(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& X,
                            const Stencil& stencil = {});

/// Field-valued variants (lazy; evaluate by finite differences on demand).
InteriorField covariant_derivative(const InteriorField& field,
                                   std::function<Eigen::VectorXd(const Eigen::VectorXd&)> direction,
                                   const Stencil& stencil = {});
InteriorField ambient_dirac(const InteriorField& field, const Stencil& stencil = {});
InteriorField twisted_dirac(const InteriorField& field, Sign sign, const Stencil& stencil = {});
InteriorField twistor_operator(const InteriorField& field,
                               std::function<Eigen::VectorXd(const Eigen::VectorXd&)> direction,
                               const Stencil& stencil = {});

/// Extrinsic Dirac operator applied pointwise to a boundary spinor function
/// through the intrinsic connection: sum_a gamma^S(E_a) nabla^S_{E_a} Phi.
Eigen::VectorXcd extrinsic_dirac_at(const ModelDomain& domain, const BoundarySpinorFn& phi,
                                    const Eigen::VectorXd& unit);

/// Relation D psi = (n-1)/2 H psi - gamma(nu) D psi - nabla_nu psi on the
/// boundary, with a one-sided inward difference for nabla_nu.
PointResidual dirac_bord_residual(const InteriorField& field, int samples, std::uint64_t seed,
                                  double normal_step = 1e-4);

}  // namespace spinlab
