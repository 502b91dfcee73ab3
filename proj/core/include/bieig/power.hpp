#ifndef BIEIG_POWER_HPP
#define BIEIG_POWER_HPP

#include <string>

#include "bieig/solver_config.hpp"
#include "bieig/types.hpp"

namespace bieig {

enum class PowerStatus { converged, max_iter, dominance_tie, breakdown };

struct PowerResult {
  BiorthoPair pair;
  ConvergenceTrace trace;
  std::uint64_t iterations = 0;
  PowerStatus status = PowerStatus::max_iter;
  std::string diagnostic;
};

/// Normalized power iteration on A with a parallel adjoint iterate; the
/// eigenvalue estimate is the Schwartz quotient of the maintained pair, the
/// iterate phase is canonicalized (largest-modulus component real positive).
/// Pass previously found pairs to iterate in their biorthogonal complement
/// (re-projected every cfg.reorthogonalize_every iterations).
PowerResult power_iterate(const CMatrix& A, const CVector& x0, const SolverConfig& cfg,
                          const std::vector<BiorthoPair>& deflated = {});

/// gamma_m = <A* x_psi_k, x_phi_k> / <x_psi_k, x_phi_k> for maintained iterates
/// x_phi_k ~ A^m x_phi and x_psi_k ~ (A*)^m x_psi (normalizations cancel).
cplx schwartz_quotient(const CMatrix& A, const CVector& x_phi_k, const CVector& x_psi_k,
                       double pairing_floor = 1e-12);

/// Power iteration on A*, yielding the left eigenvector (pair.psi) for the
/// dominant eigenvalue; pair.lambda is reported as the eigenvalue of A.
PowerResult adjoint_power_iterate(const CMatrix& A, const CVector& y0, const SolverConfig& cfg,
                                  const std::vector<BiorthoPair>& deflated = {});

/// x - sum_j <psi_j, x> phi_j. Throws when the result collapses below
/// 1e-10 * ||x|| (trial vector inside the found span; caller must re-seed).
CVector deflate_vector(const CVector& x, const std::vector<BiorthoPair>& found);

/// Power iteration on B_q = (A - q I)^{-1} with one LU reused across
/// iterations; converges to the eigenvalue of A closest to q, recovered as
/// q + 1/mu. Stopping tests the residual of the original problem.
PowerResult shifted_inverse_power(const CMatrix& A, cplx q, const CVector& x0,
                                  const SolverConfig& cfg,
                                  const std::vector<BiorthoPair>& deflated = {});

/// Two sweeps of inverse iteration with shift lambda + 1e-10: sharpens a pair
/// to near machine residual. Used on pairs entering deflation sets, whose
/// accuracy floors every later deflated run.
BiorthoPair refine_pair(const CMatrix& A, BiorthoPair pair);

struct SpectrumResult {
  std::vector<BiorthoPair> pairs;        // sorted by descending |lambda|
  std::vector<std::string> diagnostics;  // per-failure notes
  bool complete(std::size_t n) const { return pairs.size() == n; }
};

/// Orchestrates power_iterate + deflation, falling back to shifted inverse
/// power with random Gershgorin-disk shifts, until n pairs are found or the
/// attempt budget (10 n) is exhausted. Pairs are deduplicated by eigenvalue
/// proximity (1e-6 absolute-or-relative) and bi-normalized.
SpectrumResult full_spectrum(const CMatrix& A, const SolverConfig& cfg);

}  // namespace bieig

#endif
