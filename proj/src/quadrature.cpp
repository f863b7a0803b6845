// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace spinlab {

void gauss_legendre(int count, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (count < 1) throw Error(ErrorCode::Precondition, "Gauss-Legendre rule needs at least one node");
  // Golub-Welsch: eigenvalues of the Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes = es.eigenvalues();
  weights.resize(count);
  // Newton polish on P_count, then w = 2 / ((1 - x^2) P'(x)^2).
  for (int i = 0; i < count; ++i) {
    double x = nodes(i), dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    nodes(i) = x;
    weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

// Unit directions and their unit-sphere weights.
void sphere_directions(int n, const InteriorResolution& res, std::vector<Eigen::VectorXd>& dirs,
                       std::vector<double>& w) {
  const double pi = std::numbers::pi;
  if (n == 2) {
    const int m = res.angular_nodes;
    for (int k = 0; k < m; ++k) {
      const double th = 2 * pi * k / m;
      Eigen::VectorXd u(2);
      u << std::cos(th), std::sin(th);
      dirs.push_back(u);
      w.push_back(2 * pi / m);
    }
    return;
  }
  if (n == 3) {
    Eigen::VectorXd x, wx;
    gauss_legendre(res.polar_nodes, x, wx);
    const int m = res.angular_nodes;
    for (int i = 0; i < x.size(); ++i) {
      const double st = std::sqrt(1 - x(i) * x(i));
      for (int k = 0; k < m; ++k) {
        const double ph = 2 * pi * k / m;
        Eigen::VectorXd u(3);
        u << st * std::cos(ph), st * std::sin(ph), x(i);
        dirs.push_back(u);
        w.push_back(wx(i) * 2 * pi / m);
      }
    }
    return;
  }
  throw Error(ErrorCode::Unsupported, "quadrature is implemented for n = 2, 3");
}

}  // namespace

QuadratureRule interior_rule(const ModelDomain& domain, const InteriorResolution& res) {
  const int n = domain.n();
  std::vector<Eigen::VectorXd> dirs;
  std::vector<double> dw;
  sphere_directions(n, res, dirs, dw);
  Eigen::VectorXd t, wt;
  gauss_legendre(res.radial_nodes, t, wt);
  const double a = domain.euclidean_radius();

  QuadratureRule rule;
  rule.support = Support::Interior;
  rule.order = 2 * res.radial_nodes - 1;
  std::vector<double> weights;
  for (int i = 0; i < t.size(); ++i) {
    const double r = 0.5 * a * (t(i) + 1);
    const double wr = 0.5 * a * wt(i) * std::pow(r, n - 1);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      Eigen::VectorXd x = r * dirs[k];
      const double f = domain.conformal_factor(x);
      weights.push_back(wr * dw[k] * std::pow(f, n));
      rule.nodes.push_back(std::move(x));
    }
  }
  rule.weights = Eigen::Map<Eigen::VectorXd>(weights.data(), Eigen::Index(weights.size()));
  return rule;
}

QuadratureRule boundary_rule(const ModelDomain& domain, const InteriorResolution& res) {
  const int n = domain.n();
  std::vector<Eigen::VectorXd> dirs;
  std::vector<double> dw;
  sphere_directions(n, res, dirs, dw);
  const double a = domain.euclidean_radius();
  const double rb = domain.induced_radius();

  QuadratureRule rule;
  rule.support = Support::Boundary;
  rule.order = n == 2 ? res.angular_nodes - 1 : 2 * res.polar_nodes - 1;
  rule.weights.resize(Eigen::Index(dirs.size()));
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    rule.nodes.push_back(a * dirs[k]);
    rule.units.push_back(dirs[k]);
    rule.weights(Eigen::Index(k)) = dw[k] * std::pow(rb, n - 1);
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const Eigen::VectorXd& samples) {
  if (samples.size() != rule.weights.size())
    throw Error(ErrorCode::DimensionMismatch, "sample count does not match quadrature nodes");
  return rule.weights.dot(samples);
}

Complex integrate(const QuadratureRule& rule, const Eigen::VectorXcd& samples) {
  if (samples.size() != rule.weights.size())
    throw Error(ErrorCode::DimensionMismatch, "sample count does not match quadrature nodes");
  return (rule.weights.cast<Complex>().array() * samples.array()).sum();
}

double unit_ball_volume(int n) { return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1); }

double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

}  // namespace spinlab
