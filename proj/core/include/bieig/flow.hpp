#ifndef BIEIG_FLOW_HPP
#define BIEIG_FLOW_HPP

#include <string>
#include <utility>

#include "bieig/solver_config.hpp"
#include "bieig/types.hpp"

namespace bieig {

/// State of the coupled biorthogonal flow. chi is the pairing <x_psi(0), x_phi(0)>,
/// frozen at t = 0; it is a conserved quantity of the exact dynamics.
struct FlowState {
  double t = 0.0;
  CVector x_phi;
  CVector x_psi;
  cplx chi;
};

enum class FlowStatus { converged, max_time, pairing_collapse, step_underflow };

struct FlowResult {
  BiorthoPair pair;
  ConvergenceTrace trace;
  FlowStatus status = FlowStatus::max_time;
  std::string diagnostic;
};

/// ||x||^2 A x - <x,Ax> x. Requires A Hermitian (checked to 1e-12 relative);
/// otherwise throws directing the caller to coupled_rhs.
CVector hermitian_rhs(const CMatrix& A, const CVector& x);

/// Right-hand sides of the coupled flow with the frozen pairing chi:
///   d x_phi/dt = chi A x_phi - <x_psi, A x_phi> x_phi
///   d x_psi/dt = conj(chi) A* x_psi - <x_phi, A* x_psi> x_psi
std::pair<CVector, CVector> coupled_rhs(const CMatrix& A, const FlowState& s);

/// Integrates the coupled flow from a seeded random start until both residuals
/// of the stopping rule fall below delta_tol. Converges to the eigenvalue of A
/// with the largest real part reachable from the start.
FlowResult solve_flow(const CMatrix& A, const SolverConfig& cfg);

/// Runs solve_flow on -A and negates the reported eigenvalue (and the traced
/// estimates); eigenvectors are unchanged. Targets the smallest real part.
FlowResult solve_flow_smallest(const CMatrix& A, const SolverConfig& cfg);

/// Flow from explicit initial conditions. When `found` is non-empty the run is
/// segmented: at segment boundaries the state is re-projected onto the
/// biorthogonal complement of the found pairs (flow-invariant subspace) and chi
/// is re-frozen, countering the numerical reseeding of deflated components.
FlowResult solve_flow_from(const CMatrix& A, const CVector& x_phi0, const CVector& x_psi0,
                           const SolverConfig& cfg,
                           const std::vector<BiorthoPair>& found = {});

/// Random initial pair biorthogonally constrained against the found pairs:
/// <psi_j, x_phi0> = 0 and <phi_j, x_psi0> = 0 for every found j.
/// Throws if the found pairs span the whole space.
std::pair<CVector, CVector> deflated_initials(const std::vector<BiorthoPair>& found,
                                              std::size_t n, std::uint64_t seed);

}  // namespace bieig

#endif
