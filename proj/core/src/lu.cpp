#include "bieig/lu.hpp"

#include <cmath>

#include "bieig/linalg.hpp"

namespace bieig {

LuFactorization::LuFactorization(const CMatrix& A, double pivot_floor_rel)
    : lu_(A), perm_(A.order()) {
  const std::size_t n = lu_.order();
  if (n == 0) throw DimensionError("LuFactorization: empty matrix");
  const double floor = pivot_floor_rel * max_abs_entry(A);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(lu_(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    perm_[k] = piv;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
      perm_sign_ = -perm_sign_;
    }
    if (best < floor || best == 0.0)
      throw SingularMatrixError("lu: pivot below floor at step " + std::to_string(k), k);
    const cplx inv_piv = cplx{1.0, 0.0} / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = lu_(i, k) * inv_piv;
      lu_(i, k) = l;
      if (l == cplx{0.0, 0.0}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
    }
  }
}

CVector LuFactorization::solve(const CVector& b) const {
  const std::size_t n = lu_.order();
  if (b.size() != n) throw DimensionError("lu solve: dimension mismatch");
  CVector x(b);
  for (std::size_t k = 0; k < n; ++k)
    if (perm_[k] != k) std::swap(x[k], x[perm_[k]]);
  // L y = Pb, unit lower triangular
  for (std::size_t i = 1; i < n; ++i) {
    cplx acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  // U x = y
  for (std::size_t ii = n; ii-- > 0;) {
    cplx acc = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= lu_(ii, j) * x[j];
    x[ii] = acc / lu_(ii, ii);
  }
  return x;
}

CVector LuFactorization::solve_adjoint(const CVector& b) const {
  const std::size_t n = lu_.order();
  if (b.size() != n) throw DimensionError("lu solve_adjoint: dimension mismatch");
  // A = P^{-1} L U, so adjoint(A) x = b reads U* L* (P x) = b.
  CVector z(b);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = z[i];
    for (std::size_t j = 0; j < i; ++j) acc -= std::conj(lu_(j, i)) * z[j];
    z[i] = acc / std::conj(lu_(i, i));
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cplx acc = z[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= std::conj(lu_(j, ii)) * z[j];
    z[ii] = acc;
  }
  for (std::size_t kk = n; kk-- > 0;)
    if (perm_[kk] != kk) std::swap(z[kk], z[perm_[kk]]);
  return z;
}

CMatrix LuFactorization::solve_matrix(const CMatrix& B) const {
  const std::size_t n = lu_.order();
  if (B.order() != n) throw DimensionError("lu solve_matrix: dimension mismatch");
  CMatrix X(n);
  CVector col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = B(i, j);
    CVector x = solve(col);
    for (std::size_t i = 0; i < n; ++i) X(i, j) = x[i];
  }
  return X;
}

cplx LuFactorization::determinant() const {
  cplx det{static_cast<double>(perm_sign_), 0.0};
  for (std::size_t i = 0; i < lu_.order(); ++i) det *= lu_(i, i);
  return det;
}

CVector lu_solve(const CMatrix& A, const CVector& b, double pivot_floor_rel) {
  return LuFactorization(A, pivot_floor_rel).solve(b);
}

}  // namespace bieig
