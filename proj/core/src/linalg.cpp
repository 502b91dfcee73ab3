#include "bieig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace bieig {

CVector matvec(const CMatrix& A, const CVector& x) {
  const std::size_t n = A.order();
  if (x.size() != n) throw DimensionError("matvec: dimension mismatch");
  CVector y(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += A(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

CMatrix adjoint(const CMatrix& A) {
  const std::size_t n = A.order();
  CMatrix B(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = std::conj(A(j, i));
  return B;
}

cplx inner(const CVector& f, const CVector& g) {
  if (f.size() != g.size()) throw DimensionError("inner: dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < f.size(); ++k) acc += std::conj(f[k]) * g[k];
  return acc;
}

double norm2(const CVector& f) {
  double acc = 0.0;
  for (const cplx& v : f) acc += std::norm(v);
  return std::sqrt(acc);
}

cplx rayleigh(const CMatrix& A, const CVector& y) {
  const double d = norm2(y);
  if (d == 0.0) throw Error("rayleigh: zero vector");
  return inner(y, matvec(A, y)) / cplx{d * d, 0.0};
}

cplx bi_rayleigh(const CMatrix& A, const CVector& x_psi, const CVector& x_phi,
                 double pairing_floor) {
  const cplx pairing = inner(x_psi, x_phi);
  if (std::abs(pairing) < pairing_floor)
    throw PairingError("bi_rayleigh: |<x_psi,x_phi>| below pairing floor");
  return inner(x_psi, matvec(A, x_phi)) / pairing;
}

double residual(const CMatrix& A, cplx lambda, const CVector& x) {
  CVector r = matvec(A, x);
  for (std::size_t k = 0; k < x.size(); ++k) r[k] -= lambda * x[k];
  return norm2(r);
}

double v_norm(const CVector& f, const std::vector<CVector>& v) {
  double sup = 0.0;
  for (const CVector& vj : v) sup = std::max(sup, std::abs(inner(vj, f)));
  return sup;
}

CMatrix matmul(const CMatrix& A, const CMatrix& B) {
  const std::size_t n = A.order();
  if (B.order() != n) throw DimensionError("matmul: dimension mismatch");
  CMatrix C(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = A(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

CMatrix matadd(const CMatrix& A, const CMatrix& B) {
  const std::size_t n = A.order();
  if (B.order() != n) throw DimensionError("matadd: dimension mismatch");
  CMatrix C(n);
  for (std::size_t i = 0; i < n * n; ++i) C.data()[i] = A.data()[i] + B.data()[i];
  return C;
}

CMatrix matscale(cplx s, const CMatrix& A) {
  CMatrix C = A;
  for (cplx& v : C.data()) v *= s;
  return C;
}

CMatrix negate(const CMatrix& A) { return matscale(cplx{-1.0, 0.0}, A); }

double norm_inf(const CMatrix& A) {
  const std::size_t n = A.order();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(A(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs_entry(const CMatrix& A) {
  double best = 0.0;
  for (const cplx& v : A.data()) best = std::max(best, std::abs(v));
  return best;
}

bool is_hermitian(const CMatrix& A, double tol) {
  const std::size_t n = A.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(A(i, j) - std::conj(A(j, i))) > tol) return false;
  return true;
}

CVector axpy(cplx a, const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimensionError("axpy: dimension mismatch");
  CVector r(y);
  for (std::size_t k = 0; k < x.size(); ++k) r[k] += a * x[k];
  return r;
}

CVector scaled(cplx a, const CVector& x) {
  CVector r(x);
  for (cplx& v : r) v *= a;
  return r;
}

CVector vsub(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimensionError("vsub: dimension mismatch");
  CVector r(x);
  for (std::size_t k = 0; k < x.size(); ++k) r[k] -= y[k];
  return r;
}

CVector vadd(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimensionError("vadd: dimension mismatch");
  CVector r(x);
  for (std::size_t k = 0; k < x.size(); ++k) r[k] += y[k];
  return r;
}

CVector normalized(const CVector& x) {
  const double d = norm2(x);
  if (d == 0.0) throw Error("normalized: zero vector");
  return scaled(cplx{1.0 / d, 0.0}, x);
}

bool all_finite(const CVector& x) {
  for (const cplx& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool all_finite(const CMatrix& A) {
  for (const cplx& v : A.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CVector phase_canonical(const CVector& x) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double m = std::abs(x[k]);
    if (m > best) {
      best = m;
      arg = k;
    }
  }
  if (best <= 0.0) return x;
  const cplx rot = std::conj(x[arg]) / best;
  return scaled(rot, x);
}

BiorthoPair bi_normalize(cplx lambda, const CVector& phi, const CVector& psi,
                         double pairing_floor) {
  const double nphi = norm2(phi);
  const double npsi = norm2(psi);
  if (nphi == 0.0 || npsi == 0.0) throw PairingError("bi_normalize: zero eigenvector");
  CVector phi_hat = phase_canonical(scaled(cplx{1.0 / nphi, 0.0}, phi));
  const cplx pairing = inner(psi, phi_hat);
  if (std::abs(pairing) < pairing_floor * npsi)
    throw PairingError("bi_normalize: degenerate pairing <psi,phi>");
  CVector psi_hat = scaled(cplx{1.0, 0.0} / std::conj(pairing), psi);
  return BiorthoPair{lambda, std::move(phi_hat), std::move(psi_hat)};
}

}  // namespace bieig
