// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "spinlab/error.hpp"

namespace spinlab {

/// Sign conventions fixed by the representation. Clifford relation is
/// gamma_i gamma_j + gamma_j gamma_i = clifford_sign * 2 delta_ij with
/// clifford_sign = -1, every gamma_i skew-Hermitian, and for even n the
/// chirality G = chirality_prefactor * gamma_1 ... gamma_n.
template <typename Real>
struct CliffordConvention {
  int clifford_sign = -1;
  std::complex<Real> chirality_prefactor{1, 0};
  std::string chirality_branch;  // "1" or "i"
};

/// Complex spin representation of Cl(n) built as iterated tensor products
/// of Pauli matrices. Immutable once constructed.
template <typename Real>
class BasicCliffordRep {
 public:
  using Complex = std::complex<Real>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  explicit BasicCliffordRep(int n);

  int n() const { return n_; }
  int spinor_dim() const { return spinor_dim_; }
  const std::vector<Matrix>& gammas() const { return gammas_; }
  const Matrix& gamma(int i) const { return gammas_.at(static_cast<std::size_t>(i)); }
  bool has_chirality() const { return volume_element_.has_value(); }
  /// Throws Unsupported for odd n.
  const Matrix& volume_element() const;
  const CliffordConvention<Real>& convention() const { return convention_; }

 private:
  int n_;
  int spinor_dim_;
  std::vector<Matrix> gammas_;
  std::optional<Matrix> volume_element_;
  CliffordConvention<Real> convention_;
};

using CliffordRep = BasicCliffordRep<double>;

namespace detail {

template <typename Real>
typename BasicCliffordRep<Real>::Matrix kron(const typename BasicCliffordRep<Real>::Matrix& a,
                                             const typename BasicCliffordRep<Real>::Matrix& b) {
  typename BasicCliffordRep<Real>::Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

template <typename Real>
BasicCliffordRep<Real>::BasicCliffordRep(int n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidDimension, "Clifford dimension must be >= 2, got " + std::to_string(n));
  const int k = n / 2;
  spinor_dim_ = 1 << k;

  const Complex I(0, 1);
  Matrix id2 = Matrix::Identity(2, 2);
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;

  // Hermitian generators e_i with e_i^2 = Id; gamma_i = i e_i.
  auto chain = [&](int j, const Matrix& mid) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < j; ++q) out = detail::kron<Real>(out, s3);
    out = detail::kron<Real>(out, mid);
    for (int q = j + 1; q < k; ++q) out = detail::kron<Real>(out, id2);
    return out;
  };
  for (int j = 0; j < k; ++j) {
    gammas_.push_back(I * chain(j, s1));
    gammas_.push_back(I * chain(j, s2));
  }
  if (n % 2 == 1) {
    Matrix last = Matrix::Identity(1, 1);
    for (int q = 0; q < k; ++q) last = detail::kron<Real>(last, s3);
    gammas_.push_back(I * last);
  }

  if (n % 2 == 0) {
    Matrix w = Matrix::Identity(spinor_dim_, spinor_dim_);
    for (const auto& g : gammas_) w = w * g;
    // w^2 = (-1)^{n(n-1)/2} (-1)^n Id exactly; pick the prefactor branch that
    // turns it into +Id.
    const Real sq = (w * w)(0, 0).real();
    if (sq > 0) {
      convention_.chirality_prefactor = Complex(1, 0);
      convention_.chirality_branch = "1";
    } else {
      convention_.chirality_prefactor = I;
      convention_.chirality_branch = "i";
    }
    volume_element_ = convention_.chirality_prefactor * w;
  }
}

template <typename Real>
const typename BasicCliffordRep<Real>::Matrix& BasicCliffordRep<Real>::volume_element() const {
  if (!volume_element_)
    throw Error(ErrorCode::Unsupported, "chirality operator only available for even n (n=" + std::to_string(n_) + ")");
  return *volume_element_;
}

/// gamma(v) = sum_i v_i gamma_i.
template <typename Real, typename Derived>
typename BasicCliffordRep<Real>::Matrix clifford_matrix(const BasicCliffordRep<Real>& rep,
                                                        const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != rep.n())
    throw Error(ErrorCode::DimensionMismatch, "vector has " + std::to_string(v.size()) + " entries, expected " +
                                                  std::to_string(rep.n()));
  typename BasicCliffordRep<Real>::Matrix out =
      BasicCliffordRep<Real>::Matrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (int i = 0; i < rep.n(); ++i) out += typename BasicCliffordRep<Real>::Complex(v(i)) * rep.gamma(i);
  return out;
}

template <typename Real, typename DerivedV, typename DerivedS>
typename BasicCliffordRep<Real>::Vector clifford_mul(const BasicCliffordRep<Real>& rep,
                                                     const Eigen::MatrixBase<DerivedV>& v,
                                                     const Eigen::MatrixBase<DerivedS>& s) {
  if (s.size() != rep.spinor_dim())
    throw Error(ErrorCode::DimensionMismatch, "spinor has " + std::to_string(s.size()) + " entries, expected " +
                                                  std::to_string(rep.spinor_dim()));
  return clifford_matrix(rep, v) * s;
}

/// gamma^S(x) = gamma(x) gamma(nu) for x tangent to a hypersurface with unit normal nu.
template <typename Real, typename DerivedX, typename DerivedN>
typename BasicCliffordRep<Real>::Matrix tangential_clifford_matrix(const BasicCliffordRep<Real>& rep,
                                                                   const Eigen::MatrixBase<DerivedX>& x,
                                                                   const Eigen::MatrixBase<DerivedN>& nu,
                                                                   Real tol = Real(1e-12)) {
  using std::abs;
  if (x.size() != rep.n() || nu.size() != rep.n())
    throw Error(ErrorCode::DimensionMismatch, "tangential Clifford multiplication needs n-vectors");
  if (abs(nu.norm() - Real(1)) > tol) throw Error(ErrorCode::NotUnit, "normal vector is not unit");
  if (abs(x.dot(nu)) > tol) throw Error(ErrorCode::NotOrthogonal, "tangent vector is not orthogonal to the normal");
  return clifford_matrix(rep, x) * clifford_matrix(rep, nu);
}

template <typename Real, typename DerivedX, typename DerivedN, typename DerivedS>
typename BasicCliffordRep<Real>::Vector tangential_clifford(const BasicCliffordRep<Real>& rep,
                                                            const Eigen::MatrixBase<DerivedX>& x,
                                                            const Eigen::MatrixBase<DerivedN>& nu,
                                                            const Eigen::MatrixBase<DerivedS>& s) {
  if (s.size() != rep.spinor_dim()) throw Error(ErrorCode::DimensionMismatch, "spinor dimension mismatch");
  return tangential_clifford_matrix(rep, x, nu) * s;
}

/// Residuals of the representation invariants, as max-abs entry norms.
template <typename Real>
struct CliffordResiduals {
  Real anticommutation = 0;
  Real skew_hermitian = 0;
  Real chirality_square = 0;
  Real chirality_hermitian = 0;
  Real chirality_anticommutation = 0;
};

template <typename Real>
CliffordResiduals<Real> clifford_residuals(const BasicCliffordRep<Real>& rep) {
  using Matrix = typename BasicCliffordRep<Real>::Matrix;
  const int d = rep.spinor_dim();
  const Matrix id = Matrix::Identity(d, d);
  CliffordResiduals<Real> r;
  for (int i = 0; i < rep.n(); ++i) {
    const Matrix& gi = rep.gamma(i);
    r.skew_hermitian = std::max(r.skew_hermitian, (gi + gi.adjoint()).cwiseAbs().maxCoeff());
    for (int j = 0; j < rep.n(); ++j) {
      Matrix ac = gi * rep.gamma(j) + rep.gamma(j) * gi;
      if (i == j) ac += Real(2) * id;
      r.anticommutation = std::max(r.anticommutation, ac.cwiseAbs().maxCoeff());
    }
  }
  if (rep.has_chirality()) {
    const Matrix& g = rep.volume_element();
    r.chirality_square = (g * g - id).cwiseAbs().maxCoeff();
    r.chirality_hermitian = (g - g.adjoint()).cwiseAbs().maxCoeff();
    for (int i = 0; i < rep.n(); ++i)
      r.chirality_anticommutation =
          std::max(r.chirality_anticommutation, (g * rep.gamma(i) + rep.gamma(i) * g).cwiseAbs().maxCoeff());
  }
  return r;
}

}  // namespace spinlab
