#ifndef BIEIG_ORACLE_HPP
#define BIEIG_ORACLE_HPP

#include "bieig/types.hpp"

namespace bieig {

struct EigenPairFlags {
  bool converged = true;   // QR sweep budget was enough for this eigenvalue
  bool defective = false;  // degenerate pairing / repeated eigenvalue detected
  double pairing = 0.0;    // |<psi,phi>| / (||psi|| ||phi||) before bi-normalization
};

/// Full spectral data from the reference path: eigenvalues with bi-normalized
/// right/left vectors (when the pairing permits) plus per-pair diagnostics.
struct SpectralData {
  std::vector<cplx> eigenvalues;
  std::vector<CVector> right_vectors;
  std::vector<CVector> left_vectors;
  std::vector<EigenPairFlags> flags;

  bool all_converged() const {
    for (const auto& f : flags)
      if (!f.converged) return false;
    return true;
  }
};

/// Independent eigensolver: Householder reduction to Hessenberg form, explicit
/// single-shift QR with complex Wilkinson shifts, eigenvectors by inverse
/// iteration on the original matrix (left vectors through the same shifted LU).
/// Deterministic. Gives up after 100 n sweeps and flags what did not converge.
SpectralData qr_spectrum(const CMatrix& A);

/// Closed-form 2x2 eigensolver (quadratic formula + null-space vectors),
/// used as a cross-check of qr_spectrum. Defective matrices are flagged.
SpectralData eig_2x2(const CMatrix& A);

/// Closed-form trajectory of the coupled flow for a simple spectrum and real
/// initial coefficients c0 (x_phi(0) = sum c_k phi_k, x_psi(0) = sum c_k psi_k):
///   x_phi(t) = sum_k c_k sqrt(chi) e^{chi lambda_k t} / sqrt(S(t)) phi_k,
///   S(t) = sum_l c_l^2 e^{2 chi lambda_l t},  chi = sum c_l^2,
/// with the square-root branch tracked continuously from S(0) = chi > 0 and
/// the exponentials evaluated in shifted log-space (never Inf).
CVector closed_form_flow(const SpectralData& spec, const std::vector<cplx>& c0, double t);

}  // namespace bieig

#endif
