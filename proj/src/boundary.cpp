// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinlab/boundary.hpp"

#include <cmath>
#include <numbers>

#include "spinlab/quadrature.hpp"

namespace spinlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Clebsch-Gordan weights of Y_l^m (spin up) and Y_l^{m+1} (spin down) in the
// spinor harmonic with total angular momentum j and J_z = m + 1/2.
void cg_weights(double j, int l, int m, double& upper, double& lower) {
  const double twol1 = 2.0 * l + 1.0;
  const double a = std::max(0.0, double(l + m + 1)) / twol1;
  const double b = std::max(0.0, double(l - m)) / twol1;
  if (j > l) {
    upper = std::sqrt(a);
    lower = std::sqrt(b);
  } else {
    upper = -std::sqrt(b);
    lower = std::sqrt(a);
  }
}

int fourier_points(const Truncation& t) { return 2 * t.fourier_modes + 8; }
int azimuth_points(const Truncation& t) { return 4 * t.max_degree() + 8; }

}  // namespace

std::string to_string(BoundaryBasisKind kind) {
  return kind == BoundaryBasisKind::FourierS1 ? "fourier-S1" : "spinor-harmonic-S2";
}

double sph_profile(int l, int m, double theta) {
  const int am = std::abs(m);
  if (l < 0 || am > l) return 0.0;
  const double y = std::sph_legendre(unsigned(l), unsigned(am), theta);
  return (m < 0 && (am % 2 == 1)) ? -y : y;
}

double sph_profile_dtheta(int l, int m, double theta) {
  const int am = std::abs(m);
  if (l < 0 || am > l) return 0.0;
  // (1 - x^2) P' relation for the normalized functions at fixed order.
  const double yl = std::sph_legendre(unsigned(l), unsigned(am), theta);
  double ylm1 = 0.0;
  double c = 0.0;
  if (l - 1 >= am) {
    ylm1 = std::sph_legendre(unsigned(l - 1), unsigned(am), theta);
    c = std::sqrt((2.0 * l + 1.0) * (l - am) * (l + am) / (2.0 * l - 1.0));
  }
  const double d = (l * std::cos(theta) * yl - c * ylm1) / std::sin(theta);
  return (m < 0 && (am % 2 == 1)) ? -d : d;
}

Eigen::VectorXd unit_from_angles(int n, double theta, double phi) {
  Eigen::VectorXd u(n);
  if (n == 2) {
    u << std::cos(theta), std::sin(theta);
  } else if (n == 3) {
    u << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
  } else {
    throw Error(ErrorCode::Unsupported, "boundary bases exist for n = 2, 3");
  }
  return u;
}

BoundaryBasis::BoundaryBasis(int n, const Truncation& truncation) : n_(n), truncation_(truncation) {
  if (n == 2) {
    kind_ = BoundaryBasisKind::FourierS1;
    const int M = truncation.fourier_modes;
    if (M < 2 || M % 2 != 0) throw Error(ErrorCode::Precondition, "fourier_modes must be even and >= 2");
    for (int m = -M / 2; m < M / 2; ++m) {
      Sector s;
      s.m = m;
      s.offset = size_;
      s.modes = {BoundaryMode{0, 0, 0}, BoundaryMode{1, 0, 0}};
      size_ += s.size();
      sectors_.push_back(std::move(s));
    }
  } else if (n == 3) {
    kind_ = BoundaryBasisKind::SpinorHarmonicS2;
    const int L = truncation.max_degree();
    if (L < 1) throw Error(ErrorCode::Precondition, "theta_nodes must be >= 2");
    const double jmax = L - 0.5;
    for (int m = -L; m < L; ++m) {
      Sector s;
      s.m = m;
      s.offset = size_;
      for (double j = std::abs(m + 0.5); j <= jmax + 1e-9; j += 1.0) {
        s.modes.push_back(BoundaryMode{0, j, int(std::lround(j - 0.5))});
        s.modes.push_back(BoundaryMode{0, j, int(std::lround(j + 0.5))});
      }
      size_ += s.size();
      sectors_.push_back(std::move(s));
    }
  } else {
    throw Error(ErrorCode::Unsupported, "discretized boundary operators support n = 2, 3 only");
  }
}

Jet BoundaryBasis::jet(const Sector& sector, const BoundaryMode& mode, const Eigen::VectorXd& unit) const {
  Jet out;
  out.value = Eigen::VectorXcd::Zero(2);
  if (kind_ == BoundaryBasisKind::FourierS1) {
    const double th = std::atan2(unit(1), unit(0));
    const int k = sector.m + mode.component;
    const Complex v = std::polar(1.0 / std::sqrt(2 * kPi), k * th);
    out.value(mode.component) = v;
    out.tangents.resize(2, 1);
    out.tangents << -unit(1), unit(0);
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(2);
    d(mode.component) = Complex(0, k) * v;
    out.derivatives.push_back(d);
    return out;
  }
  const double th = std::acos(std::clamp(unit(2), -1.0, 1.0));
  const double ph = std::atan2(unit(1), unit(0));
  double cu = 0, cl = 0;
  cg_weights(mode.j, mode.l, sector.m, cu, cl);
  const int mu = sector.m, ml = sector.m + 1;
  const Complex eu = std::polar(1.0, mu * ph), el = std::polar(1.0, ml * ph);
  const double st = std::sin(th);
  out.value << cu * sph_profile(mode.l, mu, th) * eu, cl * sph_profile(mode.l, ml, th) * el;
  out.tangents.resize(3, 2);
  out.tangents.col(0) << std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -st;
  out.tangents.col(1) << -std::sin(ph), std::cos(ph), 0.0;
  Eigen::VectorXcd dth(2), dph(2);
  dth << cu * sph_profile_dtheta(mode.l, mu, th) * eu, cl * sph_profile_dtheta(mode.l, ml, th) * el;
  dph << Complex(0, mu / st) * out.value(0), Complex(0, ml / st) * out.value(1);
  out.derivatives = {dth, dph};
  return out;
}

Eigen::VectorXcd BoundaryBasis::value(const Sector& sector, const BoundaryMode& mode,
                                      const Eigen::VectorXd& unit) const {
  return jet(sector, mode, unit).value;
}

void BoundaryBasis::sector_quadrature(std::vector<Eigen::VectorXd>& units, Eigen::VectorXd& weights) const {
  units.clear();
  if (kind_ == BoundaryBasisKind::FourierS1) {
    const int q = fourier_points(truncation_);
    weights = Eigen::VectorXd::Constant(q, 2 * kPi / q);
    for (int k = 0; k < q; ++k) units.push_back(unit_from_angles(2, 2 * kPi * k / q));
    return;
  }
  Eigen::VectorXd x, w;
  gauss_legendre(truncation_.theta_nodes, x, w);
  weights = 2 * kPi * w;
  for (int i = 0; i < x.size(); ++i) units.push_back(unit_from_angles(3, std::acos(x(i)), 0.0));
}

bool BoundaryBasis::compatible(const BoundaryBasis& other) const {
  return n_ == other.n_ && truncation_.fourier_modes == other.truncation_.fourier_modes &&
         truncation_.theta_nodes == other.truncation_.theta_nodes;
}

std::shared_ptr<const BoundaryBasis> make_boundary_basis(const ModelDomain& domain) {
  return make_boundary_basis(domain, domain.resolution().boundary);
}

std::shared_ptr<const BoundaryBasis> make_boundary_basis(const ModelDomain& domain, const Truncation& truncation) {
  return std::make_shared<const BoundaryBasis>(domain.n(), truncation);
}

BoundaryField::BoundaryField(ModelDomain domain, std::shared_ptr<const BoundaryBasis> basis,
                             Eigen::VectorXcd coefficients)
    : domain_(std::move(domain)), basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (basis_->n() != domain_.n()) throw Error(ErrorCode::BasisMismatch, "basis dimension differs from domain");
  if (coefficients_.size() != basis_->size())
    throw Error(ErrorCode::DimensionMismatch, "coefficient count does not match the boundary basis");
}

Eigen::VectorXcd BoundaryField::operator()(const Eigen::VectorXd& unit) const { return jet(unit).value; }

Jet BoundaryField::jet(const Eigen::VectorXd& unit) const {
  Jet out;
  out.value = Eigen::VectorXcd::Zero(2);
  bool first = true;
  for (const auto& s : basis_->sectors()) {
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      const Complex c = coefficients_(s.offset + k);
      if (c == Complex(0)) continue;
      Jet j = basis_->jet(s, s.modes[std::size_t(k)], unit);
      if (first) {
        out.tangents = j.tangents;
        out.derivatives.assign(j.derivatives.size(), Eigen::VectorXcd::Zero(2));
        first = false;
      }
      out.value += c * j.value;
      for (std::size_t q = 0; q < j.derivatives.size(); ++q) out.derivatives[q] += c * j.derivatives[q];
    }
  }
  if (first) {
    const auto& s = basis_->sectors().front();
    Jet j = basis_->jet(s, s.modes.front(), unit);
    out.tangents = j.tangents;
    out.derivatives.assign(j.derivatives.size(), Eigen::VectorXcd::Zero(2));
  }
  return out;
}

double BoundaryField::l2_norm() const {
  return coefficients_.norm() * std::pow(domain_.induced_radius(), 0.5 * (domain_.n() - 1));
}

Complex BoundaryField::inner(const BoundaryField& other) const {
  if (!basis_->compatible(other.basis())) throw Error(ErrorCode::BasisMismatch, "boundary fields use different bases");
  return other.coefficients_.dot(coefficients_) * std::pow(domain_.induced_radius(), domain_.n() - 1);
}

BoundaryField BoundaryField::operator+(const BoundaryField& other) const {
  if (!basis_->compatible(other.basis())) throw Error(ErrorCode::BasisMismatch, "boundary fields use different bases");
  return BoundaryField(domain_, basis_, coefficients_ + other.coefficients_);
}

BoundaryField BoundaryField::operator-(const BoundaryField& other) const {
  if (!basis_->compatible(other.basis())) throw Error(ErrorCode::BasisMismatch, "boundary fields use different bases");
  return BoundaryField(domain_, basis_, coefficients_ - other.coefficients_);
}

BoundaryField operator*(Complex a, const BoundaryField& f) {
  return BoundaryField(f.domain_, f.basis_, a * f.coefficients_);
}

Eigen::VectorXcd project_boundary_function(const BoundaryBasis& basis,
                                           const std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>& f) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(basis.size());
  const Truncation& t = basis.truncation();
  if (basis.kind() == BoundaryBasisKind::FourierS1) {
    const int q = fourier_points(t);
    std::vector<Eigen::VectorXcd> samples;
    for (int k = 0; k < q; ++k) samples.push_back(f(unit_from_angles(2, 2 * kPi * k / q)));
    for (const auto& s : basis.sectors()) {
      for (Eigen::Index b = 0; b < s.size(); ++b) {
        const int c = s.modes[std::size_t(b)].component;
        const int freq = s.m + c;
        Complex acc = 0;
        for (int k = 0; k < q; ++k) acc += std::polar(1.0, -freq * 2 * kPi * k / q) * samples[std::size_t(k)](c);
        out(s.offset + b) = acc * (2 * kPi / q) / std::sqrt(2 * kPi);
      }
    }
    return out;
  }
  Eigen::VectorXd x, w;
  gauss_legendre(t.theta_nodes, x, w);
  const int np = azimuth_points(t);
  const int L = t.max_degree();
  for (int i = 0; i < x.size(); ++i) {
    const double th = std::acos(x(i));
    std::vector<Eigen::VectorXcd> samples;
    for (int k = 0; k < np; ++k) samples.push_back(f(unit_from_angles(3, th, 2 * kPi * k / np)));
    // azimuthal Fourier coefficients F_c(freq) = int_0^{2pi} f_c e^{-i freq phi} dphi
    auto fourier = [&](int c, int freq) {
      Complex acc = 0;
      for (int k = 0; k < np; ++k) acc += std::polar(1.0, -freq * 2 * kPi * k / np) * samples[std::size_t(k)](c);
      return acc * (2 * kPi / np);
    };
    std::vector<Complex> fu(std::size_t(2 * L + 2)), fl(std::size_t(2 * L + 2));
    for (int m = -L; m <= L; ++m) {
      fu[std::size_t(m + L)] = fourier(0, m);
      fl[std::size_t(m + L)] = fourier(1, m);
    }
    for (const auto& s : basis.sectors()) {
      const Complex Fu = fu[std::size_t(s.m + L)], Fl = fl[std::size_t(s.m + 1 + L)];
      for (Eigen::Index b = 0; b < s.size(); ++b) {
        const BoundaryMode& mode = s.modes[std::size_t(b)];
        double cu = 0, cl = 0;
        cg_weights(mode.j, mode.l, s.m, cu, cl);
        out(s.offset + b) +=
            w(i) * (cu * sph_profile(mode.l, s.m, th) * Fu + cl * sph_profile(mode.l, s.m + 1, th) * Fl);
      }
    }
  }
  return out;
}

BoundaryField restrict_to_boundary(const InteriorField& field, std::shared_ptr<const BoundaryBasis> basis) {
  if (basis->n() != field.domain().n())
    throw Error(ErrorCode::BasisMismatch, "boundary basis dimension does not match the interior field");
  const double a = field.domain().euclidean_radius();
  auto f = [&](const Eigen::VectorXd& unit) { return field(a * unit); };
  return BoundaryField(field.domain(), basis, project_boundary_function(*basis, f));
}

BoundaryField restrict_to_boundary(const InteriorField& field) {
  return restrict_to_boundary(field, make_boundary_basis(field.domain()));
}

}  // namespace spinlab
