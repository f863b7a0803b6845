// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/fields.hpp"

#include <cmath>

#include "spinlab/random.hpp"

namespace spinlab {

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string to_string(InteriorField::Basis basis) {
  switch (basis) {
    case InteriorField::Basis::CartesianPolynomial: return "cartesian-polynomial";
    case InteriorField::Basis::ClosedForm: return "closed-form";
    case InteriorField::Basis::ModeExpansion: return "mode-expansion";
  }
  return "unknown";
}

InteriorField::InteriorField(ModelDomain domain, Basis basis, Evaluator evaluator, Eigen::VectorXcd coefficients,
                             std::map<std::string, double> metadata)
    : domain_(std::move(domain)),
      basis_(basis),
      evaluator_(std::move(evaluator)),
      coefficients_(std::move(coefficients)),
      metadata_(std::move(metadata)) {}

Eigen::VectorXcd InteriorField::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != domain_.n()) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
  return evaluator_(x);
}

std::vector<std::vector<int>> monomial_exponents(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(std::size_t(n), 0);
  for (int total = 0; total <= degree; ++total) {
    // enumerate compositions of `total` into n parts, lexicographically descending in the first slot
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == n - 1) {
        alpha[std::size_t(slot)] = left;
        out.push_back(alpha);
        return;
      }
      for (int e = left; e >= 0; --e) {
        alpha[std::size_t(slot)] = e;
        rec(slot + 1, left - e);
      }
    };
    rec(0, total);
  }
  return out;
}

InteriorField polynomial_field(const ModelDomain& domain, int degree, const Eigen::VectorXcd& coefficients) {
  if (degree < 0) throw Error(ErrorCode::Precondition, "polynomial degree must be non-negative");
  const int n = domain.n();
  const int d = domain.rep().spinor_dim();
  auto exps = std::make_shared<const std::vector<std::vector<int>>>(monomial_exponents(n, degree));
  if (coefficients.size() != Eigen::Index(exps->size()) * d)
    throw Error(ErrorCode::DimensionMismatch, "polynomial coefficient count does not match degree and spinor dimension");
  Eigen::MatrixXcd C = Eigen::Map<const Eigen::MatrixXcd>(coefficients.data(), d, Eigen::Index(exps->size()));
  auto eval = [exps, C, n](const Eigen::VectorXd& x) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(C.rows());
    for (std::size_t k = 0; k < exps->size(); ++k) {
      double mono = 1.0;
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < (*exps)[k][std::size_t(i)]; ++e) mono *= x(i);
      out += mono * C.col(Eigen::Index(k));
    }
    return out;
  };
  return InteriorField(domain, InteriorField::Basis::CartesianPolynomial, eval, coefficients,
                       {{"degree", double(degree)}});
}

Eigen::VectorXcd random_spinor(int dim, std::uint64_t seed) {
  SeededRng rng(seed);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = Complex(re, im);
  }
  return v;
}

InteriorField random_polynomial_field(const ModelDomain& domain, int degree, std::uint64_t seed) {
  const auto exps = monomial_exponents(domain.n(), degree);
  const int d = domain.rep().spinor_dim();
  Eigen::VectorXcd c = 0.5 * random_spinor(int(exps.size()) * d, seed);
  return polynomial_field(domain, degree, c);
}

InteriorField zero_field(const ModelDomain& domain) {
  return polynomial_field(domain, 0, Eigen::VectorXcd::Zero(domain.rep().spinor_dim()));
}

InteriorField parallel_spinor(const ModelDomain& domain, const Eigen::VectorXcd& psi0) {
  if (domain.kind() != DomainKind::EuclideanBall)
    throw Error(ErrorCode::Unsupported, "parallel spinors are built on Euclidean balls");
  if (psi0.size() != domain.rep().spinor_dim()) throw Error(ErrorCode::DimensionMismatch, "psi0 has wrong dimension");
  if (psi0.norm() == 0.0) throw Error(ErrorCode::DegenerateInput, "psi0 must be nonzero");
  return polynomial_field(domain, 0, psi0);
}

InteriorField imaginary_killing_spinor(const ModelDomain& domain, Sign sign, const Eigen::VectorXcd& psi0) {
  if (domain.kind() != DomainKind::HyperbolicBall)
    throw Error(ErrorCode::Unsupported, "imaginary Killing spinors are built on hyperbolic balls");
  if (psi0.size() != domain.rep().spinor_dim()) throw Error(ErrorCode::DimensionMismatch, "psi0 has wrong dimension");
  if (psi0.norm() == 0.0) throw Error(ErrorCode::DegenerateInput, "psi0 must be nonzero");
  const auto rep = domain.rep_handle();
  const double s = value(sign);
  const ModelDomain dom = domain;
  auto eval = [rep, s, psi0, dom](const Eigen::VectorXd& x) {
    const Eigen::MatrixXcd g = clifford_matrix(*rep, x);
    const double f = dom.conformal_factor(x);
    Eigen::VectorXcd out = psi0 - Complex(0, s) * (g * psi0);
    return Eigen::VectorXcd(std::sqrt(f) * out);
  };
  return InteriorField(domain, InteriorField::Basis::ClosedForm, eval, psi0, {{"sign", s}});
}

Eigen::VectorXcd directional_derivative(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                        const Stencil& stencil) {
  const double h = stencil.step;
  if (stencil.order == 2) return (field(x + h * v) - field(x - h * v)) / (2 * h);
  if (stencil.order == 4)
    return (8.0 * (field(x + h * v) - field(x - h * v)) - (field(x + 2 * h * v) - field(x - 2 * h * v))) / (12 * h);
  throw Error(ErrorCode::Precondition, "finite-difference order must be 2 or 4");
}

Eigen::VectorXcd forward_derivative(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                    double step) {
  return (-3.0 * field(x) + 4.0 * field(x + step * v) - field(x + 2 * step * v)) / (2 * step);
}

}  // namespace spinlab
