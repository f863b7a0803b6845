// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "spinlab/models.hpp"

namespace spinlab {

enum class Support { Interior, Boundary };

/// Nodes are points in model coordinates; weights are the Riemannian
/// measure (conformal factors included), so sum(weights) is the volume or
/// area of the domain or its boundary. For boundary rules `units` holds the
/// outward radial direction at each node.
struct QuadratureRule {
  Support support = Support::Interior;
  std::vector<Eigen::VectorXd> nodes;
  std::vector<Eigen::VectorXd> units;
  Eigen::VectorXd weights;
  int order = 0;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int count, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

QuadratureRule interior_rule(const ModelDomain& domain, const InteriorResolution& resolution);
QuadratureRule boundary_rule(const ModelDomain& domain, const InteriorResolution& resolution);

double integrate(const QuadratureRule& rule, const Eigen::VectorXd& samples);
Complex integrate(const QuadratureRule& rule, const Eigen::VectorXcd& samples);

/// Euclidean volume of the unit ball and area of the unit sphere in R^n.
double unit_ball_volume(int n);
double unit_sphere_area(int n);

}  // namespace spinlab
