// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <memory>
#include <vector>

#include "spinlab/fields.hpp"
#include "spinlab/models.hpp"

namespace spinlab {

enum class BoundaryBasisKind { FourierS1, SpinorHarmonicS2 };

std::string to_string(BoundaryBasisKind kind);

/// One basis spinor inside a sector. On S^1 it is e^{i(m+component)theta}
/// in a single Cartesian component. On S^2 it is the spinor harmonic with
/// total angular momentum j and orbital degree l (l = j +- 1/2), upper
/// component ~ Y_l^m and lower ~ Y_l^{m+1}.
struct BoundaryMode {
  int component = 0;
  double j = 0;
  int l = 0;
};

/// Sector of fixed J_z = m + 1/2. Every rotation-invariant boundary operator
/// (extrinsic Dirac, gamma(nu), chirality) preserves it.
struct Sector {
  int m = 0;
  Eigen::Index offset = 0;
  std::vector<BoundaryMode> modes;

  Eigen::Index size() const { return Eigen::Index(modes.size()); }
};

/// Value and derivatives along an orthonormal tangent frame of the unit
/// sphere (unit-sphere arclength) of a boundary spinor, in Cartesian components.
struct Jet {
  Eigen::VectorXcd value;
  Eigen::MatrixXd tangents;  // n x (n-1), columns
  std::vector<Eigen::VectorXcd> derivatives;
};

/// Orthonormal (w.r.t. the unit-sphere measure) basis of boundary spinors,
/// block-structured by sector.
class BoundaryBasis {
 public:
  BoundaryBasis(int n, const Truncation& truncation);

  int n() const { return n_; }
  BoundaryBasisKind kind() const { return kind_; }
  const Truncation& truncation() const { return truncation_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  Eigen::Index size() const { return size_; }
  int spinor_dim() const { return 2; }

  /// Jet of one basis spinor at the unit direction `unit`.
  Jet jet(const Sector& sector, const BoundaryMode& mode, const Eigen::VectorXd& unit) const;
  Eigen::VectorXcd value(const Sector& sector, const BoundaryMode& mode, const Eigen::VectorXd& unit) const;

  /// Quadrature in the polar variable used to assemble sector blocks. On S^1
  /// the variable is the circle angle, on S^2 it is theta at phi = 0 (the
  /// azimuthal integral factors out as 2 pi). Weights include that factor.
  void sector_quadrature(std::vector<Eigen::VectorXd>& units, Eigen::VectorXd& weights) const;

  bool compatible(const BoundaryBasis& other) const;

 private:
  int n_;
  BoundaryBasisKind kind_;
  Truncation truncation_;
  std::vector<Sector> sectors_;
  Eigen::Index size_ = 0;
};

/// Normalized associated Legendre profile Y_l^m(theta, 0) (Condon-Shortley
/// phase, any sign of m) and its theta derivative.
double sph_profile(int l, int m, double theta);
double sph_profile_dtheta(int l, int m, double theta);

/// Boundary spinor field: coefficients in a BoundaryBasis over the boundary
/// sphere of a model domain.
class BoundaryField {
 public:
  BoundaryField(ModelDomain domain, std::shared_ptr<const BoundaryBasis> basis, Eigen::VectorXcd coefficients);

  const ModelDomain& domain() const { return domain_; }
  const BoundaryBasis& basis() const { return *basis_; }
  std::shared_ptr<const BoundaryBasis> basis_handle() const { return basis_; }
  const Eigen::VectorXcd& coefficients() const { return coefficients_; }

  Eigen::VectorXcd operator()(const Eigen::VectorXd& unit) const;
  Jet jet(const Eigen::VectorXd& unit) const;

  /// L2 norm over the boundary with its Riemannian measure.
  double l2_norm() const;
  Complex inner(const BoundaryField& other) const;

  BoundaryField operator+(const BoundaryField& other) const;
  BoundaryField operator-(const BoundaryField& other) const;
  friend BoundaryField operator*(Complex a, const BoundaryField& f);

 private:
  ModelDomain domain_;
  std::shared_ptr<const BoundaryBasis> basis_;
  Eigen::VectorXcd coefficients_;
};

std::shared_ptr<const BoundaryBasis> make_boundary_basis(const ModelDomain& domain);
std::shared_ptr<const BoundaryBasis> make_boundary_basis(const ModelDomain& domain, const Truncation& truncation);

/// Restricts an interior field to the boundary sphere and re-expands it in
/// the boundary basis by quadrature projection.
BoundaryField restrict_to_boundary(const InteriorField& field, std::shared_ptr<const BoundaryBasis> basis);
BoundaryField restrict_to_boundary(const InteriorField& field);

/// Projection onto the basis of an arbitrary boundary spinor function of the unit direction.
Eigen::VectorXcd project_boundary_function(const BoundaryBasis& basis,
                                           const std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>& f);

/// Direction and (theta[, phi]) angles of a unit vector.
Eigen::VectorXd unit_from_angles(int n, double theta, double phi = 0.0);

}  // namespace spinlab
