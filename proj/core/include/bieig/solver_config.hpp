#ifndef BIEIG_SOLVER_CONFIG_HPP
#define BIEIG_SOLVER_CONFIG_HPP

#include <cstdint>

#include "bieig/ode.hpp"
#include "bieig/types.hpp"

namespace bieig {

/// Shared knobs for the flow and fixed-point solvers.
struct SolverConfig {
  double delta_tol = 1e-8;           // stopping residual for both eigvector sides
  std::uint64_t max_iter = 100000;   // power-family iteration cap
  double max_time = 1e4;             // flow time cap
  std::uint64_t seed = 1;
  double pairing_floor = 1e-12;
  int reorthogonalize_every = 1;     // deflation re-projection cadence
  double drift_budget_rel = 1e-6;    // allowed |<x_psi,x_phi> - chi| / |chi|
  bool independent_start = false;    // flow: draw x_psi(0) independently of x_phi(0)
  // Flow fallback for extremely non-normal matrices (left/right eigenvectors
  // numerically self-orthogonal): evolve only the norm-preserving x_phi
  // direction flow, estimate lambda by the Rayleigh quotient (exact at an
  // eigenvector, error bounded by the residual), and skip the left vector.
  bool right_side_only = false;
  // flow integration control; tighter than the bare integrator defaults so the
  // conserved pairing stays inside the drift budget on long trajectories
  IntegratorConfig ode = [] {
    IntegratorConfig c;
    c.abs_tol = 1e-12;
    c.rel_tol = 1e-10;
    return c;
  }();

  void validate() const {
    if (!(delta_tol > 0.0) || max_iter == 0 || !(max_time > 0.0) || !(pairing_floor > 0.0) ||
        reorthogonalize_every <= 0 || !(drift_budget_rel > 0.0))
      throw Error("SolverConfig: positive tolerances and caps required");
  }
};

/// Time- or iteration-indexed eigenvalue estimates and residuals.
struct ConvergencePoint {
  double t_or_iter;
  cplx lambda_est;
  double residual_phi;
  double residual_psi;
};

struct ConvergenceTrace {
  std::vector<ConvergencePoint> samples;
};

}  // namespace bieig

#endif
