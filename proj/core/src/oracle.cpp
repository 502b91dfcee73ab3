#include "bieig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"

namespace bieig {

namespace {

// Roots of z^2 - tr z + det, cancellation-safe.
std::pair<cplx, cplx> quadratic_roots(cplx tr, cplx det) {
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  const cplx r1 = (std::abs(tr + disc) >= std::abs(tr - disc)) ? (tr + disc) * 0.5
                                                               : (tr - disc) * 0.5;
  if (std::abs(r1) == 0.0) return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  return {r1, det / r1};
}

// Reduce to upper Hessenberg by complex Householder similarity.
CMatrix to_hessenberg(CMatrix H) {
  const std::size_t n = H.order();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) tail += std::norm(H(i, k));
    const double xnorm = std::sqrt(tail);
    if (xnorm == 0.0) continue;
    CVector v(n, cplx{0.0, 0.0});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = H(i, k);
    const cplx x0 = v[k + 1];
    const cplx sign = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx{1.0, 0.0};
    const cplx alpha = -sign * xnorm;
    v[k + 1] -= alpha;
    double vv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vv += std::norm(v[i]);
    if (vv == 0.0) continue;
    const double beta = 2.0 / vv;
    // H <- P H, P = I - beta v v*
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t i = k + 1; i < n; ++i) acc += std::conj(v[i]) * H(i, j);
      acc *= beta;
      for (std::size_t i = k + 1; i < n; ++i) H(i, j) -= v[i] * acc;
    }
    // H <- H P
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc{0.0, 0.0};
      for (std::size_t j = k + 1; j < n; ++j) acc += H(i, j) * v[j];
      acc *= beta;
      for (std::size_t j = k + 1; j < n; ++j) H(i, j) -= acc * std::conj(v[j]);
    }
  }
  return H;
}

struct QrOutcome {
  std::vector<cplx> eigenvalues;
  std::vector<bool> converged;
};

QrOutcome hessenberg_qr(CMatrix H) {
  const std::size_t n = H.order();
  QrOutcome out;
  out.eigenvalues.assign(n, cplx{0.0, 0.0});
  out.converged.assign(n, true);
  if (n == 0) return out;

  const double eps = std::numeric_limits<double>::epsilon();
  std::size_t hi = n - 1;
  std::size_t last_hi = hi;
  std::size_t total_sweeps = 0;
  const std::size_t sweep_budget = 100 * n;
  std::size_t stalls = 0;

  std::vector<double> c(n, 0.0);
  std::vector<cplx> s(n, cplx{0.0, 0.0});

  while (true) {
    // deflate converged subdiagonals
    while (hi > 0) {
      const double off = std::abs(H(hi, hi - 1));
      if (off <= eps * (std::abs(H(hi - 1, hi - 1)) + std::abs(H(hi, hi)))) {
        H(hi, hi - 1) = 0.0;
        out.eigenvalues[hi] = H(hi, hi);
        if (hi == 0) break;
        --hi;
      } else {
        break;
      }
    }
    if (hi == 0) {
      out.eigenvalues[0] = H(0, 0);
      break;
    }
    std::size_t lo = hi;
    while (lo > 0) {
      const double off = std::abs(H(lo, lo - 1));
      if (off <= eps * (std::abs(H(lo - 1, lo - 1)) + std::abs(H(lo, lo)))) {
        H(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (total_sweeps++ >= sweep_budget) {
      for (std::size_t i = 0; i <= hi; ++i) {
        out.eigenvalues[i] = H(i, i);
        out.converged[i] = false;
      }
      break;
    }

    if (hi != last_hi) {
      stalls = 0;
      last_hi = hi;
    }

    // Wilkinson shift from the trailing 2x2, exceptional shift on stalls
    cplx sigma;
    {
      const cplx a = H(hi - 1, hi - 1), b = H(hi - 1, hi);
      const cplx cc = H(hi, hi - 1), d = H(hi, hi);
      auto [r1, r2] = quadratic_roots(a + d, a * d - b * cc);
      sigma = (std::abs(r1 - d) <= std::abs(r2 - d)) ? r1 : r2;
      if (++stalls % 12 == 0) sigma = d + cplx{1.5, 0.75} * std::abs(cc);
    }

    // explicit shifted QR step on the active block [lo, hi]
    for (std::size_t i = lo; i <= hi; ++i) H(i, i) -= sigma;
    for (std::size_t j = lo; j < hi; ++j) {
      const cplx a = H(j, j), b = H(j + 1, j);
      const double r = std::sqrt(std::norm(a) + std::norm(b));
      if (r == 0.0) {
        c[j] = 1.0;
        s[j] = 0.0;
        continue;
      }
      if (std::abs(a) == 0.0) {
        c[j] = 0.0;
        s[j] = 1.0;
      } else {
        c[j] = std::abs(a) / r;
        s[j] = (a / std::abs(a)) * std::conj(b) / r;
      }
      // rows j, j+1 of the block
      for (std::size_t col = j; col <= hi; ++col) {
        const cplx t1 = H(j, col), t2 = H(j + 1, col);
        H(j, col) = c[j] * t1 + s[j] * t2;
        H(j + 1, col) = -std::conj(s[j]) * t1 + c[j] * t2;
      }
    }
    for (std::size_t j = lo; j < hi; ++j) {
      // columns j, j+1: postmultiply by G_j^*
      const std::size_t top = lo;
      for (std::size_t row = top; row <= std::min(j + 1, hi); ++row) {
        const cplx t1 = H(row, j), t2 = H(row, j + 1);
        H(row, j) = c[j] * t1 + std::conj(s[j]) * t2;
        H(row, j + 1) = -s[j] * t1 + c[j] * t2;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) H(i, i) += sigma;
  }
  return out;
}

// Deterministic inverse-iteration start: mildly structured so it is never
// orthogonal to the target by symmetry.
CVector iteration_seed(std::size_t n) {
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1) / static_cast<double>(n);
    v[i] = cplx{1.0 + 0.3 * x, 0.2 - 0.1 * x * x};
  }
  return v;
}

}  // namespace

SpectralData qr_spectrum(const CMatrix& A) {
  const std::size_t n = A.order();
  if (n == 0) throw DimensionError("qr_spectrum: empty matrix");
  SpectralData out;
  if (n == 1) {
    out.eigenvalues = {A(0, 0)};
    out.right_vectors = {CVector{cplx{1.0, 0.0}}};
    out.left_vectors = {CVector{cplx{1.0, 0.0}}};
    out.flags = {EigenPairFlags{true, false, 1.0}};
    return out;
  }

  QrOutcome qr = hessenberg_qr(to_hessenberg(A));
  // sort by descending real part
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const cplx za = qr.eigenvalues[a], zb = qr.eigenvalues[b];
    if (za.real() != zb.real()) return za.real() > zb.real();
    return za.imag() > zb.imag();
  });

  const double scale = std::max(1.0, norm_inf(A));
  out.eigenvalues.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const cplx lambda = qr.eigenvalues[idx[r]];
    EigenPairFlags fl;
    fl.converged = qr.converged[idx[r]];

    // inverse iteration on the original matrix with a perturbed shift
    const cplx shift = lambda + cplx{1e-10 * scale, 0.0};
    CMatrix As = A;
    for (std::size_t i = 0; i < n; ++i) As(i, i) -= shift;
    CVector phi = iteration_seed(n);
    CVector psi = iteration_seed(n);
    bool solved = true;
    try {
      LuFactorization lu(As, 0.0);
      for (int sweep = 0; sweep < 4; ++sweep) {
        phi = normalized(lu.solve(phi));
        psi = normalized(lu.solve_adjoint(psi));
        if (residual(A, lambda, phi) < 1e-12 * scale && sweep >= 1) break;
      }
    } catch (const SingularMatrixError&) {
      solved = false;
    }
    if (!solved || !all_finite(phi) || !all_finite(psi)) {
      fl.converged = false;
      phi = CVector(n, cplx{0.0, 0.0});
      psi = CVector(n, cplx{0.0, 0.0});
      phi[r % n] = 1.0;
      psi[r % n] = 1.0;
    }
    phi = phase_canonical(phi);
    const cplx pairing = inner(psi, phi);
    fl.pairing = std::abs(pairing) / std::max(norm2(psi) * norm2(phi), 1e-300);
    if (fl.pairing < 1e-10) {
      fl.defective = true;
    } else {
      psi = scaled(cplx{1.0, 0.0} / std::conj(pairing), psi);
    }
    out.eigenvalues.push_back(lambda);
    out.right_vectors.push_back(std::move(phi));
    out.left_vectors.push_back(std::move(psi));
    out.flags.push_back(fl);
  }

  // flag repeated eigenvalues as defective-suspect
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(out.eigenvalues[i] - out.eigenvalues[j]) <= 1e-10 * scale) {
        out.flags[i].defective = true;
        out.flags[j].defective = true;
      }
  return out;
}

SpectralData eig_2x2(const CMatrix& A) {
  if (A.order() != 2) throw DimensionError("eig_2x2: matrix must be 2x2");
  const cplx a = A(0, 0), b = A(0, 1), c = A(1, 0), d = A(1, 1);
  auto [l1, l2] = quadratic_roots(a + d, a * d - b * c);
  if (l2.real() > l1.real() || (l2.real() == l1.real() && l2.imag() > l1.imag()))
    std::swap(l1, l2);

  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  auto right_vec = [&](cplx l) -> CVector {
    // null space of A - l I from the larger of the two row constructions
    const CVector v1{b, l - a};
    const CVector v2{l - d, c};
    CVector v = (norm2(v1) >= norm2(v2)) ? v1 : v2;
    if (norm2(v) < 1e-14 * scale) v = CVector{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    return phase_canonical(normalized(v));
  };
  auto left_vec = [&](cplx l) -> CVector {
    // eigenvector of adjoint(A) for conj(l)
    const cplx lc = std::conj(l);
    const CVector w1{std::conj(c), lc - std::conj(a)};
    const CVector w2{lc - std::conj(d), std::conj(b)};
    CVector v = (norm2(w1) >= norm2(w2)) ? w1 : w2;
    if (norm2(v) < 1e-14 * scale) v = CVector{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    return normalized(v);
  };

  SpectralData out;
  out.eigenvalues = {l1, l2};
  const bool repeated = std::abs(l1 - l2) <= 1e-12 * scale;
  const bool scalar = std::abs(b) <= 1e-14 * scale && std::abs(c) <= 1e-14 * scale &&
                      std::abs(a - d) <= 1e-14 * scale;
  for (int i = 0; i < 2; ++i) {
    const cplx l = (i == 0) ? l1 : l2;
    CVector phi, psi;
    EigenPairFlags fl;
    if (repeated && scalar) {
      phi = CVector{cplx{i == 0 ? 1.0 : 0.0, 0.0}, cplx{i == 0 ? 0.0 : 1.0, 0.0}};
      psi = phi;
      fl.pairing = 1.0;
    } else {
      phi = right_vec(l);
      psi = left_vec(l);
      const cplx pairing = inner(psi, phi);
      fl.pairing = std::abs(pairing) / std::max(norm2(psi), 1e-300);
      if (repeated || fl.pairing < 1e-10)
        fl.defective = true;
      else
        psi = scaled(cplx{1.0, 0.0} / std::conj(pairing), psi);
    }
    out.right_vectors.push_back(std::move(phi));
    out.left_vectors.push_back(std::move(psi));
    out.flags.push_back(fl);
  }
  return out;
}

CVector closed_form_flow(const SpectralData& spec, const std::vector<cplx>& c0, double t) {
  const std::size_t n = spec.eigenvalues.size();
  if (c0.size() != n) throw DimensionError("closed_form_flow: c0 size mismatch");
  double chi = 0.0;
  bool nonzero = false;
  for (const cplx& c : c0) {
    if (std::abs(c.imag()) > 0.0)
      throw Error("closed_form_flow: c0 must be real (derivation restriction)");
    chi += c.real() * c.real();
    if (c.real() != 0.0) nonzero = true;
  }
  if (!nonzero) throw Error("closed_form_flow: c0 must not be all zero");

  const double rmax = [&] {
    double r = spec.eigenvalues[0].real();
    for (const cplx& l : spec.eigenvalues) r = std::max(r, l.real());
    return r;
  }();

  // S(tau) = sum c_l^2 e^{2 chi (lambda_l - rmax) tau}, bounded for tau >= 0
  auto S = [&](double tau) {
    cplx acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) {
      const cplx e = std::exp(2.0 * chi * (spec.eigenvalues[l] - rmax) * tau);
      acc += c0[l].real() * c0[l].real() * e;
    }
    return acc;
  };

  // continuous sqrt branch along [0, t]
  double arg_cum = 0.0;  // S(0) = chi e^{-2 chi rmax * 0}... arg 0
  cplx s_prev = S(0.0);
  const int base_steps = 64;
  double tau = 0.0;
  double step = t / base_steps;
  if (t > 0.0) {
    while (tau < t) {
      double next = std::min(tau + step, t);
      for (;;) {
        const cplx s_next = S(next);
        if (std::abs(s_next) == 0.0) throw Error("closed_form_flow: S(t) vanished");
        const double dphi = std::arg(s_next / s_prev);
        if (std::abs(dphi) < 1.4 || next - tau < 1e-12 * std::max(t, 1.0)) {
          arg_cum += dphi;
          s_prev = s_next;
          tau = next;
          break;
        }
        next = tau + 0.5 * (next - tau);
      }
    }
  }
  // S(0) = chi > 0 has argument zero, so the accumulated argument is absolute
  const cplx sqrt_S =
      std::sqrt(std::abs(s_prev)) * std::exp(cplx{0.0, 0.5 * arg_cum});

  CVector x(spec.right_vectors[0].size(), cplx{0.0, 0.0});
  const double sqrt_chi = std::sqrt(chi);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ek = std::exp(chi * (spec.eigenvalues[k] - rmax) * t);
    const cplx ck = c0[k].real() * sqrt_chi * ek / sqrt_S;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += ck * spec.right_vectors[k][i];
  }
  return x;
}

}  // namespace bieig
