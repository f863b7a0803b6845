// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinlab/quadrature.hpp"

namespace spinlab {

namespace {

double boundary_scale(const ModelDomain& domain) {
  return std::pow(domain.induced_radius(), 0.5 * (domain.n() - 1));
}

struct Eigenpair {
  double value;
  std::size_t sector;
  Eigen::VectorXcd vector;
};

}  // namespace

SpectrumResult spectrum(const OperatorMatrix& op, int k) {
  if (op.hermiticity_residual() > 1e-10)
    throw Error(ErrorCode::ConventionViolation, "operator is not Hermitian (defect " +
                                                    std::to_string(op.hermiticity_residual()) + ")");
  std::vector<Eigenpair> pairs;
  SpectrumResult out;
  out.kind = op.kind();
  out.sign = op.sign();
  double top = 0;
  const auto& blocks = op.blocks();
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blocks[s]);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double lam = es.eigenvalues()(i);
      const Eigen::VectorXcd v = es.eigenvectors().col(i);
      out.max_residual = std::max(out.max_residual, (blocks[s] * v - lam * v).norm());
      top = std::max(top, std::abs(lam));
      pairs.push_back({lam, s, v});
    }
  }
  // magnitudes compared on a 1e-9 grid so that degenerate levels stay grouped
  auto key = [](double v) { return std::round(std::abs(v) * 1e9); };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Eigenpair& a, const Eigenpair& b) {
    if (key(a.value) != key(b.value)) return key(a.value) < key(b.value);
    return a.value < b.value;
  });
  const std::size_t count = k <= 0 ? pairs.size() : std::min(pairs.size(), std::size_t(k));
  out.eigenvalues.resize(Eigen::Index(count));
  const auto& sectors = op.basis().sectors();
  for (std::size_t i = 0; i < count; ++i) {
    out.eigenvalues(Eigen::Index(i)) = pairs[i].value;
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(op.size());
    c.segment(sectors[pairs[i].sector].offset, sectors[pairs[i].sector].size()) = pairs[i].vector;
    out.eigenvectors.emplace_back(op.domain(), op.basis_handle(), std::move(c));
  }
  out.cutoff = 0.5 * top;
  return out;
}

double first_positive_eigenvalue(const SpectrumResult& s) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues(i) > 0) best = std::min(best, s.eigenvalues(i));
  return best;
}

std::string to_string(const BoundaryCondition& c) {
  return std::string(c.kind == ConditionKind::Mit ? "MIT" : "CHI") + to_string(c.sign);
}

BoundaryCondition boundary_condition_from_string(const std::string& name) {
  if (name == "MIT+") return {ConditionKind::Mit, Sign::Plus};
  if (name == "MIT-") return {ConditionKind::Mit, Sign::Minus};
  if (name == "CHI+") return {ConditionKind::Chirality, Sign::Plus};
  if (name == "CHI-") return {ConditionKind::Chirality, Sign::Minus};
  throw Error(ErrorCode::Usage, "unknown boundary condition '" + name + "'");
}

int extension_eigen_sign(BoundaryCondition condition) {
  // CHI+ pairs with D(-) = D + i, so D Psi = -i Psi.
  return condition.kind == ConditionKind::Mit ? 0 : -value(condition.sign);
}

namespace {

// Regular solution of D Psi = s i Psi in sector m on the Poincare (or flat)
// disk, Psi = f^{-1/2} chi with chi = (z^m A, z^{m+1} B) for m >= 0 and
// (zbar^p A, zbar^{p-1} B), p = -m, otherwise; A, B power series in |z|^2.
struct SectorSeries {
  int m = 0;
  Complex c = 0;
  std::vector<double> a, b;

  void build(int sector, int s, double tmax) {
    m = sector;
    a.clear();
    b.clear();
    const int kmax = 20000;
    double peak = 1.0;
    if (m >= 0) {
      a.push_back(1.0);
      for (int k = 0; k < kmax; ++k) {
        const double bprev = k == 0 ? 0.0 : b.back();
        b.push_back((s * a[std::size_t(k)] + (m + k) * bprev) / (m + 1 + k));
        a.push_back((s * b[std::size_t(k)] + k * a[std::size_t(k)]) / (k + 1));
        const double tk = std::pow(tmax, k + 1);
        peak = std::max({peak, std::abs(a.back()), std::abs(b.back())});
        if ((std::abs(a.back()) + std::abs(b.back())) * tk < 1e-18 * peak && k > 2) break;
      }
    } else {
      const int p = -m;
      b.push_back(1.0);
      for (int k = 0; k < kmax; ++k) {
        const double aprev = k == 0 ? 0.0 : a.back();
        a.push_back((s * b[std::size_t(k)] + (p + k - 1) * aprev) / (p + k));
        b.push_back((s * a[std::size_t(k)] + k * b[std::size_t(k)]) / (k + 1));
        const double tk = std::pow(tmax, k + 1);
        peak = std::max({peak, std::abs(a.back()), std::abs(b.back())});
        if ((std::abs(a.back()) + std::abs(b.back())) * tk < 1e-18 * peak && k > 2) break;
      }
    }
  }

  static double horner(const std::vector<double>& c, double t) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  // chi at z
  Eigen::Vector2cd chi(Complex z) const {
    const double t = std::norm(z);
    Eigen::Vector2cd out;
    if (m >= 0) {
      const Complex zm = std::pow(z, m);
      out << zm * horner(a, t), zm * z * horner(b, t);
    } else {
      const int p = -m;
      const Complex zb = std::conj(z);
      out << std::pow(zb, p) * horner(a, t), std::pow(zb, p - 1) * horner(b, t);
    }
    return out;
  }

  // trace of the unit solution in the (upper, lower) basis functions of the sector
  Eigen::Vector2cd trace(double radius, double factor) const {
    const double t = radius * radius;
    const double scale = std::sqrt(2 * std::numbers::pi / factor);
    Eigen::Vector2cd v;
    if (m >= 0)
      v << scale * std::pow(radius, m) * horner(a, t), scale * std::pow(radius, m + 1) * horner(b, t);
    else
      v << scale * std::pow(radius, -m) * horner(a, t), scale * std::pow(radius, -m - 1) * horner(b, t);
    return v;
  }
};

}  // namespace

InteriorField extend_harmonic(const ModelDomain& domain, const BoundaryField& data, BoundaryCondition condition) {
  if (domain.n() != 2) throw Error(ErrorCode::Unsupported, "harmonic extension is implemented for n = 2");
  if (data.basis().kind() != BoundaryBasisKind::FourierS1 || !data.domain().same_geometry(domain))
    throw Error(ErrorCode::BasisMismatch, "boundary data does not live on this domain's circle");
  if (condition.kind == ConditionKind::Chirality && domain.kind() != DomainKind::HyperbolicBall)
    throw Error(ErrorCode::Unsupported, "the chirality condition is paired with the twisted hyperbolic operator");

  const Truncation& tr = data.basis().truncation();
  const OperatorMatrix P = condition.kind == ConditionKind::Mit ? mit_projection(domain, condition.sign, tr)
                                                                : chirality_projection(domain, condition.sign, tr);
  const int s = extension_eigen_sign(condition);
  const double a = domain.euclidean_radius();
  Eigen::VectorXd edge(2);
  edge << a, 0.0;
  const double fb = domain.conformal_factor(edge);

  const auto& sectors = data.basis().sectors();
  Eigen::VectorXcd coeffs(Eigen::Index(sectors.size()));
  for (std::size_t q = 0; q < sectors.size(); ++q) {
    SectorSeries ser;
    ser.build(sectors[q].m, s, a * a);
    const Eigen::Vector2cd v = ser.trace(a, fb);
    const Eigen::Vector2cd d = data.coefficients().segment(sectors[q].offset, 2);
    const Eigen::Vector2cd pv = P.blocks()[q] * v;
    if (pv.norm() < 1e-12 * v.norm())
      throw Error(ErrorCode::NumericalInvertibility,
                  "boundary problem is singular in sector " + std::to_string(sectors[q].m));
    coeffs(Eigen::Index(q)) = pv.dot(P.blocks()[q] * d) / pv.squaredNorm();
  }
  return mode_expansion_field(domain, tr, condition, coeffs);
}

InteriorField mode_expansion_field(const ModelDomain& domain, const Truncation& truncation,
                                   BoundaryCondition condition, const Eigen::VectorXcd& coefficients) {
  if (domain.n() != 2) throw Error(ErrorCode::Unsupported, "mode expansions are implemented for n = 2");
  const BoundaryBasis basis(2, truncation);
  const auto& sectors = basis.sectors();
  if (coefficients.size() != Eigen::Index(sectors.size()))
    throw Error(ErrorCode::DimensionMismatch, "one coefficient per Fourier sector expected");
  const int s = extension_eigen_sign(condition);
  const double a = domain.euclidean_radius();
  auto series = std::make_shared<std::vector<SectorSeries>>();
  for (std::size_t q = 0; q < sectors.size(); ++q) {
    const Complex c = coefficients(Eigen::Index(q));
    if (c == Complex(0)) continue;
    SectorSeries ser;
    ser.build(sectors[q].m, s, a * a);
    ser.c = c;
    series->push_back(std::move(ser));
  }

  const ModelDomain dom = domain;
  auto eval = [series, dom](const Eigen::VectorXd& x) {
    const Complex z(x(0), x(1));
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(2);
    for (const auto& ser : *series) out += ser.c * ser.chi(z);
    return Eigen::VectorXcd(out / std::sqrt(dom.conformal_factor(x)));
  };
  return InteriorField(domain, InteriorField::Basis::ModeExpansion, eval, coefficients,
                       {{"condition_kind", condition.kind == ConditionKind::Mit ? 0.0 : 1.0},
                        {"condition_sign", double(value(condition.sign))},
                        {"fourier_modes", double(truncation.fourier_modes)},
                        {"theta_nodes", double(truncation.theta_nodes)}});
}

Eigen::VectorXcd multiply_boundary(const BoundaryField& field, const BoundaryScalarFn& f) {
  return project_boundary_function(field.basis(),
                                   [&](const Eigen::VectorXd& u) { return Eigen::VectorXcd(f(u) * field(u)); });
}

BoundaryField perturb(const BoundaryField& field, double relative, std::uint64_t seed) {
  Eigen::VectorXcd noise = random_spinor(int(field.coefficients().size()), seed);
  noise *= relative * field.coefficients().norm() / noise.norm();
  return BoundaryField(field.domain(), field.basis_handle(), field.coefficients() + noise);
}

namespace {

struct PipelineSetup {
  OperatorMatrix op;
  OperatorMatrix projection;
  BoundaryCondition condition;
  int killing_sign;  // 0: parallelism
};

double hypothesis_residual(const ModelDomain& domain, const OperatorMatrix& op, const BoundaryField& phi,
                           const BoundaryScalarFn& H0) {
  const Eigen::VectorXcd r = op.apply(phi.coefficients()) - 0.5 * (domain.n() - 1) * multiply_boundary(phi, H0);
  return r.norm() * boundary_scale(domain);
}

RigidityReport run_pipeline(const ModelDomain& domain, const BoundaryField& data, const BoundaryScalarFn& H0,
                            const PipelineSetup& setup, const RigidityThresholds& thr, std::uint64_t seed) {
  if (data.coefficients().norm() == 0.0) throw Error(ErrorCode::DegenerateInput, "boundary data must be nonzero");
  RigidityReport rep;
  rep.thresholds = thr;
  const double H = domain.mean_curvature();
  const int n = domain.n();

  std::vector<Eigen::VectorXd> units;
  Eigen::VectorXd w;
  data.basis().sector_quadrature(units, w);
  for (const auto& u : units) {
    const double h0 = H0(u);
    if (!(h0 >= -1e-12 && h0 <= H + 1e-12))
      throw Error(ErrorCode::Precondition, "H0 must satisfy 0 <= H0 <= H on the boundary");
    rep.H0_equals_H_residual = std::max(rep.H0_equals_H_residual, std::abs(h0 - H));
  }

  rep.phi_norm = data.l2_norm();
  rep.boundary_dirac_residual = hypothesis_residual(domain, setup.op, data, H0);

  const InteriorField psi = extend_harmonic(domain, data, setup.condition);
  const CliffordRep& cl = domain.rep();
  const QuadratureRule rule = interior_rule(domain, domain.resolution().interior);
  const Sign twist = setup.killing_sign > 0 ? Sign::Plus : Sign::Minus;
  for (const auto& x : rule.nodes) {
    const Eigen::VectorXcd v = psi(x);
    rep.psi_sup = std::max(rep.psi_sup, v.norm());
    const Eigen::VectorXcd dpsi = setup.killing_sign == 0 ? ambient_dirac_at(psi, x) : twisted_dirac_at(psi, twist, x);
    rep.extension_dirac_residual = std::max(rep.extension_dirac_residual, dpsi.norm());
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd e = Eigen::VectorXd::Unit(n, k);
      Eigen::VectorXcd r = covariant_derivative(psi, x, e);
      if (setup.killing_sign != 0) r += Complex(0, 0.5 * setup.killing_sign) * (cl.gamma(k) * v);
      rep.parallelism_residual = std::max(rep.parallelism_residual, r.norm());
    }
  }

  const BoundaryField trace = restrict_to_boundary(psi, data.basis_handle());
  const Eigen::VectorXcd diff = trace.coefficients() - data.coefficients();
  rep.boundary_match_residual = setup.projection.apply(diff).norm() * boundary_scale(domain);
  rep.trace_match_residual = diff.norm() * boundary_scale(domain);

  const BoundaryField noisy = perturb(data, thr.noise, seed);
  rep.control_boundary_dirac_residual = hypothesis_residual(domain, setup.op, noisy, H0);
  rep.control_pass = rep.control_boundary_dirac_residual < thr.boundary_dirac * noisy.l2_norm();

  rep.pass = rep.boundary_dirac_residual < thr.boundary_dirac * rep.phi_norm &&
             rep.extension_dirac_residual < thr.extension_dirac && rep.boundary_match_residual < thr.boundary_match &&
             rep.parallelism_residual < thr.parallelism * rep.psi_sup && rep.H0_equals_H_residual < thr.mean_curvature;
  return rep;
}

}  // namespace

RigidityReport rigidity_experiment(const ModelDomain& domain, const BoundaryField& data, const BoundaryScalarFn& H0,
                                   Sign mit_sign, const RigidityThresholds& thresholds, std::uint64_t seed) {
  if (domain.kind() != DomainKind::EuclideanBall)
    throw Error(ErrorCode::Precondition, "the flat pipeline runs on Euclidean balls");
  const Truncation& tr = data.basis().truncation();
  PipelineSetup setup{assemble_extrinsic_dirac(domain, tr), mit_projection(domain, mit_sign, tr),
                      {ConditionKind::Mit, mit_sign}, 0};
  return run_pipeline(domain, data, H0, setup, thresholds, seed);
}

RigidityReport hyperbolic_rigidity_experiment(const ModelDomain& domain, const BoundaryField& data,
                                              const BoundaryScalarFn& H0, Sign sign,
                                              const RigidityThresholds& thresholds, std::uint64_t seed) {
  if (domain.kind() != DomainKind::HyperbolicBall)
    throw Error(ErrorCode::Precondition, "the hyperbolic pipeline runs on hyperbolic balls");
  if (!domain.rep().has_chirality()) throw Error(ErrorCode::Unsupported, "the chirality condition needs even n");
  const Truncation& tr = data.basis().truncation();
  const Sign chi = opposite(sign);
  PipelineSetup setup{assemble_twisted_dirac(domain, sign, tr), chirality_projection(domain, chi, tr),
                      {ConditionKind::Chirality, chi}, value(sign)};
  return run_pipeline(domain, data, H0, setup, thresholds, seed);
}

HmrReport hmr_bound_check(const ModelDomain& domain, Sign sign, double tol) {
  const SpectrumResult s = spectrum(assemble_twisted_dirac(domain, sign));
  HmrReport r;
  r.lambda1 = first_positive_eigenvalue(s);
  r.bound = 0.5 * (domain.n() - 1) * domain.mean_curvature();
  r.gap = r.lambda1 - r.bound;
  r.equality = std::abs(r.gap) < tol;
  return r;
}

PsiPmResult psi_pm_construct(const ModelDomain& domain, double alpha, Sign sign, std::uint64_t seed) {
  if (!(alpha > 1.0)) throw Error(ErrorCode::Precondition, "alpha must exceed 1");
  if (domain.kind() != DomainKind::HyperbolicBall)
    throw Error(ErrorCode::Precondition, "the construction lives on a hyperbolic geodesic sphere");
  const double beta = std::sqrt(alpha * alpha - 1.0);
  if (std::abs(domain.induced_radius() * beta - 1.0) > 1e-9)
    throw Error(ErrorCode::Precondition, "boundary sphere radius differs from 1/sqrt(alpha^2 - 1)");

  const OperatorMatrix N = normal_clifford(domain);
  const OperatorMatrix T = assemble_twisted_dirac(domain, sign);
  const Eigen::VectorXcd psi0 = random_spinor(2, seed).normalized();
  const Eigen::VectorXcd c =
      project_boundary_function(N.basis(), [&](const Eigen::VectorXd&) { return psi0; });
  const Eigen::VectorXcd cpm = c + Complex(0, value(sign) * (alpha - beta)) * N.apply(c);

  PsiPmResult out{BoundaryField(domain, N.basis_handle(), cpm), 0.5 * (domain.n() - 1) * alpha, 0};
  out.residual = (T.apply(cpm) - out.eigenvalue * cpm).norm() * boundary_scale(domain);
  return out;
}

PsiPmResult psi_pm_construct(int n, double alpha, Sign sign, const Resolution& resolution, std::uint64_t seed) {
  const ModelDomain domain(DomainKind::HyperbolicBall, n, hyperbolic_radius_for_alpha(alpha), resolution);
  return psi_pm_construct(domain, alpha, sign, seed);
}

}  // namespace spinlab
