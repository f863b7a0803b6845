// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spinlab/models.hpp"

namespace spinlab {

enum class Sign { Plus = 1, Minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
std::string to_string(Sign s);

/// Spinor field on the interior of a model domain. Components are taken in
/// the Cartesian orthonormal frame of the domain. Evaluation is linear in the
/// coefficients; closed-form and mode-expansion fields keep their defining
/// data in `coefficients` so they can be serialized.
class InteriorField {
 public:
  enum class Basis { CartesianPolynomial, ClosedForm, ModeExpansion };
  using Evaluator = std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>;

  InteriorField(ModelDomain domain, Basis basis, Evaluator evaluator, Eigen::VectorXcd coefficients = {},
                std::map<std::string, double> metadata = {});

  Eigen::VectorXcd operator()(const Eigen::VectorXd& x) const;

  const ModelDomain& domain() const { return domain_; }
  Basis basis() const { return basis_; }
  const Eigen::VectorXcd& coefficients() const { return coefficients_; }
  const std::map<std::string, double>& metadata() const { return metadata_; }
  int spinor_dim() const { return domain_.rep().spinor_dim(); }

 private:
  ModelDomain domain_;
  Basis basis_;
  Evaluator evaluator_;
  Eigen::VectorXcd coefficients_;
  std::map<std::string, double> metadata_;
};

std::string to_string(InteriorField::Basis basis);

/// Multi-indices of total degree <= degree in n variables, graded then lexicographic.
std::vector<std::vector<int>> monomial_exponents(int n, int degree);

/// Polynomial spinor field; `coefficients` is monomial-major: entry
/// (k * spinor_dim + c) multiplies x^{alpha_k} in component c.
InteriorField polynomial_field(const ModelDomain& domain, int degree, const Eigen::VectorXcd& coefficients);
InteriorField random_polynomial_field(const ModelDomain& domain, int degree, std::uint64_t seed);
InteriorField zero_field(const ModelDomain& domain);

/// Constant field psi(x) = psi0 in the Cartesian frame of a Euclidean ball.
InteriorField parallel_spinor(const ModelDomain& domain, const Eigen::VectorXcd& psi0);

/// Imaginary Killing spinor on the Poincare ball with
/// nabla_X psi = -sign (i/2) gamma(X) psi, so that D psi = sign (n/2) i psi.
/// Closed form: psi(x) = f(x)^{1/2} (1 - sign i gamma(x)) psi0 with f the conformal factor.
InteriorField imaginary_killing_spinor(const ModelDomain& domain, Sign sign, const Eigen::VectorXcd& psi0);

/// Centered finite differences of order 2 or 4; `forward` gives the
/// second-order one-sided stencil along +v (used for inward normal derivatives).
struct Stencil {
  double step = 1e-4;
  int order = 4;
};

Eigen::VectorXcd directional_derivative(const InteriorField& field, const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& v, const Stencil& stencil = {});
Eigen::VectorXcd forward_derivative(const InteriorField& field, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                    double step);

/// Seeded complex Gaussian vector (unit variance per real part).
Eigen::VectorXcd random_spinor(int dim, std::uint64_t seed);

}  // namespace spinlab
