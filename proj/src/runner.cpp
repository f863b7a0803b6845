// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "spinlab/clifford.hpp"
#include "spinlab/integrals.hpp"
#include "spinlab/operators.hpp"
#include "spinlab/random.hpp"
#include "spinlab/solve.hpp"

namespace spinlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  T v{};
  try {
    if constexpr (std::is_same_v<T, int>) v = std::stoi(t, &used);
    if constexpr (std::is_same_v<T, double>) v = std::stod(t, &used);
    if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!t.empty() && t[0] == '-') throw std::invalid_argument("negative");
      v = std::stoull(t, &used);
    }
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw Error(ErrorCode::Usage, "invalid value '" + text + "' for " + key);
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const std::string& canonical_key(const std::string& key) {
  static const std::map<std::string, std::string> aliases = {
      {"suite", "suite"}, {"n", "n"},       {"kind", "kind"},     {"radius", "radius"},
      {"rho", "radius"},  {"alpha", "alpha"}, {"modes", "modes"}, {"tol", "tol"},
      {"seed", "seed"},   {"out", "out"},   {"format", "format"}, {"dump-spectrum", "dump-spectrum"},
      {"dump_spectrum", "dump-spectrum"}};
  const auto it = aliases.find(key);
  if (it == aliases.end()) throw Error(ErrorCode::Usage, "unknown configuration key '" + key + "'");
  return it->second;
}

}  // namespace

void apply_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& value) {
  const std::string& key = canonical_key(trim(raw_key));
  const std::string v = trim(value);
  if (key == "suite") {
    c.suite = v;
  } else if (key == "n") {
    c.n = parse_number<int>(key, v);
  } else if (key == "kind") {
    c.kind = domain_kind_from_string(v);
  } else if (key == "radius") {
    c.radius = parse_number<double>(key, v);
  } else if (key == "alpha") {
    c.alpha = parse_number<double>(key, v);
  } else if (key == "modes") {
    c.modes = parse_number<int>(key, v);
  } else if (key == "tol") {
    c.tol = parse_number<double>(key, v);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, v);
  } else if (key == "out") {
    c.out = v;
  } else if (key == "format") {
    c.format = report_format_from_string(v);
  } else if (key == "dump-spectrum") {
    c.dump_spectrum = v;
  }
  c.given.insert(key);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Usage, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::map<std::string, std::string> out;

  if (trim(text).starts_with("{")) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Usage, "config file '" + path + "' is not valid JSON: " + e.what());
    }
    for (const auto& [k, v] : doc.items()) {
      if (v.is_string()) out[k] = v.get<std::string>();
      else if (v.is_number()) out[k] = v.dump();
      else throw Error(ErrorCode::Usage, "config key '" + k + "' must be a string or a number");
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Usage, path + ":" + std::to_string(number) + ": expected 'key = value'");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list = {
      {"clifford", "--n (2..8)", "anticommutation, skew-Hermiticity and chirality axioms of the gamma matrices"},
      {"operators", "--n (2|3) --kind --radius",
       "boundary operator identities, boundary Dirac relation, spinorial Gauss formula, energy-momentum tensor"},
      {"reilly", "--n (2|3) --radius  [euclidean-ball]", "integral Reilly formula and Green formula"},
      {"hyperbolic-reilly", "--n (2|3) --radius (geodesic)  [hyperbolic-ball]",
       "twisted Reilly formula on Killing spinors and random fields"},
      {"spectrum", "--n (2|3) --kind --radius", "extrinsic Dirac spectrum against the exact lattice"},
      {"rigidity", "--radius  [n = 2, euclidean-ball]", "MIT extension pipeline on restricted parallel spinors"},
      {"hyperbolic-rigidity", "--radius (geodesic)  [n = 2, hyperbolic-ball]",
       "chirality extension pipeline on restricted Killing spinors"},
      {"hmr", "--n (2|3) --radius (geodesic)  [hyperbolic-ball]", "first eigenvalue of the twisted operator at its bound"},
      {"psi-pm", "--n (2|3) --alpha (> 1)  [hyperbolic-ball]", "explicit eigenspinors of the twisted operator"},
      {"all", "(none)", "every suite over a fixed parameter sweep"},
  };
  return list;
}

std::string suite_help() {
  std::string out = "Suites (required parameters):\n";
  for (const auto& s : suites()) {
    out += "  " + s.name + std::string(std::max<std::size_t>(2, 22 - s.name.size()), ' ') + s.parameters + "\n";
    out += std::string(24, ' ') + s.description + "\n";
  }
  return out;
}

ExperimentConfig validated(ExperimentConfig c) {
  if (c.suite.empty()) throw Error(ErrorCode::Usage, "missing --suite");
  const auto& list = suites();
  if (std::none_of(list.begin(), list.end(), [&](const SuiteInfo& s) { return s.name == c.suite; }))
    throw Error(ErrorCode::Usage, "unknown suite '" + c.suite + "'");
  if (c.out.empty()) throw Error(ErrorCode::Usage, "missing --out");

  auto force_kind = [&](DomainKind k) {
    if (c.given.count("kind") && c.kind != k)
      throw Error(ErrorCode::Usage, "suite " + c.suite + " runs on " + to_string(k));
    c.kind = k;
  };
  auto force_n = [&](int n) {
    if (c.given.count("n") && c.n != n) throw Error(ErrorCode::Usage, "suite " + c.suite + " needs n = " + std::to_string(n));
    c.n = n;
  };
  const std::string& s = c.suite;
  if (s == "reilly" || s == "rigidity") force_kind(DomainKind::EuclideanBall);
  if (s == "hyperbolic-reilly" || s == "hyperbolic-rigidity" || s == "hmr" || s == "psi-pm")
    force_kind(DomainKind::HyperbolicBall);
  if (s == "rigidity" || s == "hyperbolic-rigidity") force_n(2);

  if (s == "clifford") {
    if (c.n < 2 || c.n > 8) throw Error(ErrorCode::Usage, "clifford needs 2 <= n <= 8");
  } else if (s != "all" && c.n != 2 && c.n != 3) {
    throw Error(ErrorCode::Usage, "suite " + s + " needs n = 2 or 3");
  }
  if (!(c.radius > 0) || !std::isfinite(c.radius)) throw Error(ErrorCode::Usage, "--radius must be positive");
  if (s == "psi-pm") {
    if (!c.alpha) throw Error(ErrorCode::Usage, "psi-pm needs --alpha");
    if (!(*c.alpha > 1) || !std::isfinite(*c.alpha)) throw Error(ErrorCode::Usage, "--alpha must exceed 1");
    const double rho = hyperbolic_radius_for_alpha(*c.alpha);
    if (c.given.count("radius") && std::abs(c.radius - rho) > 1e-12 * rho)
      throw Error(ErrorCode::Usage, "--radius disagrees with coth(radius) = alpha");
    c.radius = rho;
  }
  if (c.tol && !(*c.tol > 0)) throw Error(ErrorCode::Usage, "--tol must be positive");
  if (c.modes) {
    const int m = *c.modes;
    if (c.n == 2 && (m < 4 || m % 2)) throw Error(ErrorCode::Usage, "--modes must be even and >= 4 for n = 2");
    if (c.n != 2 && m < 4) throw Error(ErrorCode::Usage, "--modes must be >= 4");
    if (s == "spectrum" && c.n == 2 && m < 34) throw Error(ErrorCode::Usage, "spectrum on S^1 needs --modes >= 34");
    if (s == "spectrum" && c.n == 3 && m < 18) throw Error(ErrorCode::Usage, "spectrum on S^2 needs --modes >= 18");
  }
  return c;
}

// ---- suites -----------------------------------------------------------------

namespace {

struct Context {
  const ExperimentConfig& cfg;
  VerificationReport& rep;
  std::vector<double>& spectrum;

  double thr(double fallback) const { return cfg.tol.value_or(fallback); }
  std::uint64_t seed(const std::string& label) const { return derive_seed(cfg.seed, cfg.suite + "/" + label); }
};

Resolution resolution_of(const ExperimentConfig& c) {
  Resolution r;
  if (c.modes) (c.n == 2 ? r.boundary.fourier_modes : r.boundary.theta_nodes) = *c.modes;
  return r;
}

ModelDomain domain_of(const ExperimentConfig& c) { return ModelDomain(c.kind, c.n, c.radius, resolution_of(c)); }

Eigen::VectorXcd unit_spinor(int dim, std::uint64_t seed) { return random_spinor(dim, seed).normalized(); }

const char* suffix(Sign s) { return s == Sign::Plus ? "_plus" : "_minus"; }

constexpr Sign kSigns[] = {Sign::Plus, Sign::Minus};

void clifford_suite(Context& ctx) {
  const int n = ctx.cfg.n;
  const CliffordRep rep(n);
  const auto r = clifford_residuals(rep);
  const double t = ctx.thr(1e-13);
  ctx.rep.add("spinor_dim", rep.spinor_dim(), double(1 << (n / 2)), rep.spinor_dim() == (1 << (n / 2)));
  ctx.rep.add_below("anticommutation", r.anticommutation, t);
  ctx.rep.add_below("skew_hermitian", r.skew_hermitian, t);
  if (rep.has_chirality()) {
    ctx.rep.add_below("chirality_square", r.chirality_square, t);
    ctx.rep.add_below("chirality_hermitian", r.chirality_hermitian, t);
    ctx.rep.add_below("chirality_anticommutation", r.chirality_anticommutation, t);
  }
  const CliffordRep again(n);
  double diff = 0;
  for (int i = 0; i < n; ++i) diff = std::max(diff, (rep.gamma(i) - again.gamma(i)).cwiseAbs().maxCoeff());
  ctx.rep.add("deterministic_construction", diff, 0, diff == 0);
}

void operators_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  const int n = d.n();
  const double q = 0.5 * (n - 1);
  const double t = ctx.thr(1e-10);
  VerificationReport& rep = ctx.rep;

  const OperatorMatrix D = assemble_extrinsic_dirac(d);
  const OperatorMatrix N = normal_clifford(d);
  const OperatorMatrix I = D.identity_like();
  rep.add_below("closure", D.closure_residual(), t);
  rep.add_below("dirac_hermitian", D.hermiticity_residual(), t);
  rep.add_below("normal_square", (N * N + I).norm(), t);
  rep.add_below("nudirac", (D * N + N * D).norm(), t);
  for (Sign s : kSigns) {
    const OperatorMatrix P = mit_projection(d, s);
    const OperatorMatrix Po = mit_projection(d, opposite(s));
    rep.add_below(std::string("ppm") + suffix(s), (D * P - Po * D).norm(), t);
    rep.add_below(std::string("mit_idempotent") + suffix(s), (P * P - P).norm(), t);
    const OperatorMatrix T = assemble_twisted_dirac(d, s);
    rep.add_below(std::string("twisted_hermitian") + suffix(s), T.hermiticity_residual(), t);
    rep.add_below(std::string("twisted_square") + suffix(s), (T * T - D * D - Complex(q * q) * I).norm(), t);
  }
  if (d.rep().has_chirality()) {
    const OperatorMatrix Tp = assemble_twisted_dirac(d, Sign::Plus);
    for (Sign s : kSigns) {
      const OperatorMatrix B = chirality_projection(d, s);
      const OperatorMatrix Bo = chirality_projection(d, opposite(s));
      rep.add_below(std::string("chirality_lemma") + suffix(s), (Tp * B - Bo * Tp).norm(), t);
      rep.add_below(std::string("chirality_idempotent") + suffix(s), (B * B - B).norm(), t);
    }
  }

  double bord = 0, gauss = 0;
  for (int i = 0; i < 5; ++i) {
    const InteriorField f = random_polynomial_field(d, 3, ctx.seed("field/" + std::to_string(i)));
    const std::uint64_t where = ctx.seed("samples/" + std::to_string(i));
    bord = std::max(bord, dirac_bord_residual(f, 200, where).max);
    gauss = std::max(gauss, gauss_formula_residual(f, 200, where).max);
  }
  rep.add_below("dirac_bord", bord, ctx.thr(1e-6));
  rep.add_below("gauss_formula", gauss, ctx.thr(1e-6));

  const ExtrinsicData ex = boundary_geometry(d, 100, ctx.seed("gauss-codazzi"));
  rep.add_below("gauss_equation", ex.gauss_codazzi.gauss, ctx.thr(1e-8));
  rep.add_below("codazzi_equation", ex.gauss_codazzi.codazzi, ctx.thr(1e-6));

  if (d.kind() == DomainKind::EuclideanBall) {
    const Eigen::VectorXcd psi0 = unit_spinor(d.rep().spinor_dim(), ctx.seed("parallel"));
    const EnergyMomentumReport em = energy_momentum(d, [psi0](const Eigen::VectorXd&) { return psi0; });
    rep.add_below("energy_momentum", em.weingarten_residual, ctx.thr(1e-8));
    rep.add_below("energy_momentum_symmetry", em.symmetry_residual, ctx.thr(1e-8));
  }
}

Truncation refined_truncation(const ModelDomain& d) {
  Truncation t = d.resolution().boundary;
  if (d.n() == 2) t.fourier_modes *= 2;
  else t.theta_nodes += 16;
  return t;
}

void spectrum_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  const int n = d.n();
  const double q = 0.5 * (n - 1);
  const double rb = d.induced_radius();
  const double H = d.mean_curvature();
  VerificationReport& rep = ctx.rep;

  const OperatorMatrix D = assemble_extrinsic_dirac(d);
  const SpectrumResult s = spectrum(D);
  const SpectrumResult s2 = spectrum(assemble_extrinsic_dirac(d, refined_truncation(d)));

  // Exact lattice: +-(k + (n-1)/2) / R_b with multiplicity per sign 2 (S^1) or 2(k+1) (S^2).
  const int levels = n == 2 ? 16 : 8;
  std::vector<double> expected;
  std::vector<int> mult;
  for (int k = 0; k <= levels; ++k) {
    const int m = n == 2 ? 2 : 2 * (k + 1);
    mult.push_back(m);
    for (int sign : {-1, 1})
      for (int j = 0; j < m; ++j) expected.push_back(sign * (k + q) / rb);
  }
  const Eigen::Index count = Eigen::Index(expected.size());
  double lattice = 0, two_res = 0;
  for (Eigen::Index i = 0; i < count; ++i) {
    lattice = std::max(lattice, std::abs(s.eigenvalues(i) - expected[std::size_t(i)]));
    two_res = std::max(two_res, std::abs(s.eigenvalues(i) - s2.eigenvalues(i)));
    rep.eigenvalues.push_back(s.eigenvalues(i));
  }
  int mismatched = 0;
  for (int k = 0; k <= levels; ++k)
    for (int sign : {-1, 1}) {
      const double mu = sign * (k + q) / rb;
      const auto hits = ((s.eigenvalues.array() - mu).abs() < 1e-6).count();
      if (hits != mult[std::size_t(k)]) ++mismatched;
    }
  double symmetry = 0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double l = s.eigenvalues(i);
    if (std::abs(l) >= s.cutoff) continue;
    ctx.spectrum.push_back(l);
    symmetry = std::max(symmetry, (s.eigenvalues.array() + l).abs().minCoeff());
  }
  const double lambda1 = first_positive_eigenvalue(s);
  const double bound = d.kind() == DomainKind::EuclideanBall ? q * H : q * std::sqrt(H * H - 1);

  rep.add_below("lattice", lattice, ctx.thr(1e-10));
  rep.add("multiplicity_mismatches", mismatched, 0, mismatched == 0);
  rep.add_below("symmetry", symmetry, ctx.thr(1e-9));
  rep.add_below("two_resolution", two_res, ctx.thr(1e-8));
  rep.add_below("first_eigenvalue", std::abs(lambda1 - bound), ctx.thr(1e-10));
  rep.add_below("hermiticity", D.hermiticity_residual(), ctx.thr(1e-10));
  rep.add_below("eigen_residual", s.max_residual, ctx.thr(1e-9));
}

void reilly_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  VerificationReport& rep = ctx.rep;
  const InteriorResolution fine = d.resolution().interior.refined();

  const Eigen::VectorXcd psi0 = unit_spinor(d.rep().spinor_dim(), ctx.seed("constant"));
  rep.add_below("constant_spinor", reilly_residual(parallel_spinor(d, psi0)).residual, ctx.thr(1e-10));
  for (int i = 0; i < 5; ++i) {
    const InteriorField f = random_polynomial_field(d, 5, ctx.seed("field/" + std::to_string(i)));
    const double coarse = reilly_residual(f).residual;
    const double refined = reilly_residual(f, fine).residual;
    rep.add_below("random_field_" + std::to_string(i), coarse, ctx.thr(1e-5));
    rep.add("convergence_ratio_" + std::to_string(i), coarse / refined, 4, coarse / refined >= 4);
  }
  const InteriorField g = random_polynomial_field(d, 3, ctx.seed("green"));
  rep.add_below("green", green_residual(g).residual, ctx.thr(1e-10));
  rep.add_below("lichnerowicz", lichnerowicz_residual(g, 20, ctx.seed("lichnerowicz")).max, ctx.thr(1e-6));
}

void hyperbolic_reilly_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  VerificationReport& rep = ctx.rep;
  const double t = ctx.thr(1e-5);
  const Eigen::VectorXcd psi0 = unit_spinor(d.rep().spinor_dim(), ctx.seed("killing"));
  for (Sign s : kSigns) {
    const ReillyReport r = hyperbolic_reilly_residual(imaginary_killing_spinor(d, s, psi0), s);
    const std::string k = std::string("killing") + suffix(s) + "/";
    rep.add_below(k + "twistor", std::abs(r.terms.at("twistor")), t);
    rep.add_below(k + "dirac", std::abs(r.terms.at("dirac")), t);
    rep.add_below(k + "curvature", std::abs(r.terms.at("curvature")), t);
    rep.add_below(k + "boundary_side", std::abs(r.rhs_boundary), t);
    rep.add_below(k + "residual", r.residual, t);
  }
  const InteriorResolution fine = d.resolution().interior.refined();
  for (int i = 0; i < 2; ++i) {
    const Sign s = kSigns[i];
    const InteriorField f = random_polynomial_field(d, 5, ctx.seed("field/" + std::to_string(i)));
    const double coarse = hyperbolic_reilly_residual(f, s).residual;
    const double refined = hyperbolic_reilly_residual(f, s, fine).residual;
    const std::string k = std::string("random") + suffix(s) + "/";
    rep.add_below(k + "residual", coarse, t);
    rep.add(k + "convergence_ratio", coarse / refined, 4, coarse / refined >= 4);
  }
}

void add_pipeline_checks(Context& ctx, const std::string& prefix, const RigidityReport& r) {
  VerificationReport& rep = ctx.rep;
  const RigidityThresholds& thr = r.thresholds;
  rep.add_below(prefix + "boundary_dirac", r.boundary_dirac_residual / r.phi_norm, ctx.thr(thr.boundary_dirac));
  rep.add_below(prefix + "extension_dirac", r.extension_dirac_residual, ctx.thr(thr.extension_dirac));
  rep.add_below(prefix + "trace_match", r.boundary_match_residual, ctx.thr(thr.boundary_match));
  rep.add_below(prefix + "parallelism", r.parallelism_residual / r.psi_sup, ctx.thr(thr.parallelism));
  rep.add_below(prefix + "mean_curvature_equality", r.H0_equals_H_residual, ctx.thr(thr.mean_curvature));
  // The perturbed data must violate the hypothesis.
  rep.add_above(prefix + "negative_control", r.control_boundary_dirac_residual / r.phi_norm, thr.boundary_dirac);
}

void rigidity_suite(Context& ctx, bool hyperbolic) {
  const ModelDomain d = domain_of(ctx.cfg);
  const double H = d.mean_curvature();
  const BoundaryScalarFn H0 = [H](const Eigen::VectorXd&) { return H; };
  const BoundaryScalarFn half = [H](const Eigen::VectorXd&) { return 0.5 * H; };
  const Eigen::VectorXcd psi0 = unit_spinor(2, ctx.seed("spinor"));
  for (Sign s : kSigns) {
    const std::string tag = std::string(hyperbolic ? "killing" : "mit") + suffix(s);
    const std::uint64_t noise = ctx.seed("noise" + std::string(suffix(s)));
    auto experiment = [&](const BoundaryField& phi, const BoundaryScalarFn& h0) {
      return hyperbolic ? hyperbolic_rigidity_experiment(d, phi, h0, s, {}, noise)
                        : rigidity_experiment(d, phi, h0, s, {}, noise);
    };
    const InteriorField source = hyperbolic ? imaginary_killing_spinor(d, s, psi0) : parallel_spinor(d, psi0);
    const BoundaryField phi = restrict_to_boundary(source);
    const RigidityReport r = experiment(phi, H0);
    add_pipeline_checks(ctx, tag + "/", r);
    ctx.rep.add(tag + "/pipeline_pass", r.pass, 1, r.pass);
    const RigidityReport wrong = experiment(phi, half);
    ctx.rep.add(tag + "/half_mean_curvature_rejected", wrong.boundary_dirac_residual / wrong.phi_norm,
                wrong.thresholds.boundary_dirac, !wrong.pass);
  }
}

void hmr_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  for (Sign s : kSigns) {
    const HmrReport r = hmr_bound_check(d, s);
    const std::string k = std::string("hmr") + suffix(s) + "/";
    ctx.rep.add(k + "gap", r.gap, 1e-4, r.gap >= -1e-6 && r.gap <= 1e-4);
    ctx.rep.add(k + "equality", r.equality, 1, r.equality);
    ctx.rep.eigenvalues.push_back(r.lambda1);
  }
}

void psi_pm_suite(Context& ctx) {
  const ModelDomain d = domain_of(ctx.cfg);
  const double alpha = *ctx.cfg.alpha;
  const double target = 0.5 * (d.n() - 1) * alpha;
  for (Sign s : kSigns) {
    const PsiPmResult r = psi_pm_construct(d, alpha, s, ctx.seed("spinor" + std::string(suffix(s))));
    const std::string k = std::string("psi") + suffix(s) + "/";
    ctx.rep.add_below(k + "residual", r.residual, ctx.thr(1e-8));
    ctx.rep.add_below(k + "eigenvalue", std::abs(r.eigenvalue - target), ctx.thr(1e-10));
    ctx.rep.eigenvalues.push_back(r.eigenvalue);
  }
}

nlohmann::ordered_json params_of(const ExperimentConfig& c) {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  const std::string& s = c.suite;
  if (s != "all") p["n"] = c.n;
  if (s != "all" && s != "clifford") {
    p["kind"] = to_string(c.kind);
    p["radius"] = c.radius;
    const Resolution r = resolution_of(c);
    p["modes"] = c.n == 2 ? r.boundary.fourier_modes : r.boundary.theta_nodes;
  }
  if (s == "psi-pm") p["alpha"] = *c.alpha;
  if (c.tol) p["tol"] = *c.tol;
  p["generator"] = std::string(SeededRng::kName);
  return p;
}

void run_suite(Context& ctx);

std::string label(const ExperimentConfig& c) {
  std::string out = c.suite + "[n=" + std::to_string(c.n);
  if (c.suite == "psi-pm") return out + ",alpha=" + fmt(*c.alpha) + "]";
  if (c.suite != "clifford") out += "," + to_string(c.kind) + ",radius=" + fmt(c.radius);
  return out + "]";
}

void all_suite(Context& ctx) {
  std::vector<ExperimentConfig> plan;
  auto add = [&](const std::string& suite, int n, DomainKind kind, double radius, std::optional<double> alpha = {}) {
    ExperimentConfig c = ctx.cfg;
    c.suite = suite;
    c.n = n;
    c.kind = kind;
    c.radius = radius;
    c.alpha = alpha;
    c.given.clear();
    c.modes.reset();
    plan.push_back(c);
  };
  const auto E = DomainKind::EuclideanBall;
  const auto Hy = DomainKind::HyperbolicBall;
  for (int n = 2; n <= 8; ++n) add("clifford", n, E, 1.0);
  for (int n : {2, 3}) {
    add("operators", n, E, 1.0);
    add("operators", n, E, 2.0);
    add("operators", n, Hy, 1.0);
  }
  add("reilly", 2, E, 1.0);
  for (int n : {2, 3}) add("hyperbolic-reilly", n, Hy, 1.0);
  for (int n : {2, 3}) add("spectrum", n, E, 1.0);
  add("rigidity", 2, E, 1.0);
  add("hyperbolic-rigidity", 2, Hy, 1.0);
  for (int n : {2, 3})
    for (double rho : {0.5, 1.0, 2.0}) add("hmr", n, Hy, rho);
  for (int n : {2, 3})
    for (double a : {1.5, 2.0, 3.0}) add("psi-pm", n, Hy, hyperbolic_radius_for_alpha(a), a);

  for (const auto& c : plan) {
    VerificationReport sub;
    std::vector<double> ignored;
    Context inner{c, sub, ignored};
    run_suite(inner);
    ctx.rep.merge(sub, label(c));
  }
}

void run_suite(Context& ctx) {
  const std::string& s = ctx.cfg.suite;
  try {
    if (s == "clifford") clifford_suite(ctx);
    else if (s == "operators") operators_suite(ctx);
    else if (s == "reilly") reilly_suite(ctx);
    else if (s == "hyperbolic-reilly") hyperbolic_reilly_suite(ctx);
    else if (s == "spectrum") spectrum_suite(ctx);
    else if (s == "rigidity") rigidity_suite(ctx, false);
    else if (s == "hyperbolic-rigidity") rigidity_suite(ctx, true);
    else if (s == "hmr") hmr_suite(ctx);
    else if (s == "psi-pm") psi_pm_suite(ctx);
    else if (s == "all") all_suite(ctx);
    else throw Error(ErrorCode::Usage, "unknown suite '" + s + "'");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Usage) throw;
    ctx.rep.add(std::string("error: ") + e.what(), std::numeric_limits<double>::quiet_NaN(), 0, false);
  }
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  out.report.suite = config.suite;
  out.report.seed = config.seed;
  out.report.params = params_of(config);
  Context ctx{config, out.report, out.spectrum};
  run_suite(ctx);
  if (out.spectrum.empty()) out.spectrum = out.report.eigenvalues;
  out.report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int run_and_emit(ExperimentConfig config, std::ostream& err) {
  try {
    config = validated(std::move(config));
  } catch (const Error& e) {
    err << "spinlab: " << e.what() << "\n";
    return 2;
  }
  const RunResult result = run(config);
  try {
    emit(result.report, config.format, config.out);
    if (!config.dump_spectrum.empty()) write_spectrum_dump(result.spectrum, config.dump_spectrum);
  } catch (const Error& e) {
    err << "spinlab: " << e.what() << "\n";
    return 2;
  }
  err << summary(result.report);
  return result.report.pass() ? 0 : 1;
}

}  // namespace spinlab
