#include "bieig/flow.hpp"

#include <algorithm>
#include <cmath>

#include "bieig/linalg.hpp"
#include "bieig/rng.hpp"

namespace bieig {

namespace {

// Real-part-tie diagnostic: compare best residuals over geometrically growing
// time windows [t/4, t/2) vs [t/2, t]. An exponentially converging flow always
// clears the decrease threshold once the window outgrows its rate; a tie never
// does. Checks are armed late and fire only on consecutive strikes.
constexpr double kStagnationArmTime = 50.0;
constexpr double kStagnationDecrease = 0.01;
constexpr int kStagnationStrikes = 2;

CVector project_out_right(CVector x, const std::vector<BiorthoPair>& found) {
  for (int pass = 0; pass < 2; ++pass)
    for (const BiorthoPair& p : found) {
      const cplx c = inner(p.psi, x);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * p.phi[i];
    }
  return x;
}

CVector project_out_left(CVector y, const std::vector<BiorthoPair>& found) {
  for (int pass = 0; pass < 2; ++pass)
    for (const BiorthoPair& p : found) {
      const cplx c = inner(p.phi, y);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * p.psi[i];
    }
  return y;
}

// Gershgorin bound on the spread of real parts; controls deflated segment length.
double real_spread_bound(const CMatrix& A) {
  const std::size_t n = A.order();
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r += std::abs(A(i, j));
    const double c = A(i, i).real();
    if (i == 0) {
      lo = c - r;
      hi = c + r;
    } else {
      lo = std::min(lo, c - r);
      hi = std::max(hi, c + r);
    }
  }
  return hi - lo;
}

struct FlowMonitor {
  const CMatrix& A;
  const CMatrix& Adag;
  const SolverConfig& cfg;
  cplx chi;
  double t_offset = 0.0;
  ConvergenceTrace trace;
  FlowStatus status = FlowStatus::max_time;
  std::string diagnostic;
  bool done = false;

  double next_check_t = kStagnationArmTime;
  int strikes = 0;

  bool operator()(double t_local, const CVector& z) {
    const std::size_t n = A.order();
    const double t = t_offset + t_local;
    // segment restarts re-present the previous endpoint; skip the duplicate
    if (!trace.samples.empty() && t <= trace.samples.back().t_or_iter) return false;
    CVector xphi(z.begin(), z.begin() + n);
    CVector xpsi(z.begin() + n, z.end());

    const cplx pairing = inner(xpsi, xphi);
    if (std::abs(pairing) < cfg.pairing_floor) {
      status = FlowStatus::pairing_collapse;
      diagnostic = "pairing |<x_psi,x_phi>| underran the floor";
      done = true;
      return true;
    }
    if (std::abs(pairing - chi) > cfg.drift_budget_rel * std::abs(chi)) {
      status = FlowStatus::pairing_collapse;
      diagnostic = "conserved pairing drifted beyond budget (integrator failure)";
      done = true;
      return true;
    }

    const cplx lambda = inner(xpsi, matvec(A, xphi)) / pairing;
    // residuals on unit-normalized vectors, so the converged pair satisfies
    // residual(A, lambda, phi) < delta_tol after bi-normalization
    const double res_phi = residual(A, lambda, xphi) / std::max(norm2(xphi), 1e-300);
    const double res_psi =
        residual(Adag, std::conj(lambda), xpsi) / std::max(norm2(xpsi), 1e-300);

    if (trace.samples.empty() || t > trace.samples.back().t_or_iter)
      trace.samples.push_back({t, lambda, res_phi, res_psi});

    if (std::max(res_phi, res_psi) < cfg.delta_tol) {
      status = FlowStatus::converged;
      done = true;
      return true;
    }

    // stagnation (real-part ties): residual refuses to decrease while t runs
    if (t >= next_check_t) {
      next_check_t = 2.0 * t;
      double early = std::numeric_limits<double>::infinity();
      double late = std::numeric_limits<double>::infinity();
      for (const ConvergencePoint& p : trace.samples) {
        const double r = std::max(p.residual_phi, p.residual_psi);
        if (p.t_or_iter >= 0.25 * t && p.t_or_iter < 0.5 * t) early = std::min(early, r);
        if (p.t_or_iter >= 0.5 * t) late = std::min(late, r);
      }
      if (std::isfinite(early) && std::isfinite(late) &&
          late >= early * (1.0 - kStagnationDecrease)) {
        if (++strikes >= kStagnationStrikes) {
          status = FlowStatus::max_time;
          diagnostic =
              "residual stagnation across geometric time windows (real-part tie or "
              "degenerate dominance)";
          done = true;
          return true;
        }
      } else {
        strikes = 0;
      }
    }
    return false;
  }
};

}  // namespace

CVector hermitian_rhs(const CMatrix& A, const CVector& x) {
  const double scale = std::max(1.0, max_abs_entry(A));
  if (!is_hermitian(A, 1e-12 * scale))
    throw Error("hermitian_rhs: matrix is not Hermitian; use coupled_rhs");
  if (!all_finite(x)) throw Error("hermitian_rhs: non-finite state");
  CVector Ax = matvec(A, x);
  const double nn = norm2(x);
  const cplx xAx = inner(x, Ax);
  CVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = nn * nn * Ax[i] - xAx * x[i];
  return out;
}

std::pair<CVector, CVector> coupled_rhs(const CMatrix& A, const FlowState& s) {
  const std::size_t n = A.order();
  if (s.x_phi.size() != n || s.x_psi.size() != n)
    throw DimensionError("coupled_rhs: dimension mismatch");
  const CMatrix Adag = adjoint(A);
  CVector Aphi = matvec(A, s.x_phi);
  CVector Apsi = matvec(Adag, s.x_psi);
  const cplx lam_phi = inner(s.x_psi, Aphi);
  const cplx lam_psi = inner(s.x_phi, Apsi);
  CVector fphi(n), fpsi(n);
  for (std::size_t i = 0; i < n; ++i) {
    fphi[i] = s.chi * Aphi[i] - lam_phi * s.x_phi[i];
    fpsi[i] = std::conj(s.chi) * Apsi[i] - lam_psi * s.x_psi[i];
  }
  return {std::move(fphi), std::move(fpsi)};
}

namespace {

// x_phi-only fallback: dx/dt = ||x||^2 A x - <x,Ax> x preserves ||x|| for any
// A (<x, dx/dt> = 0 identically) and its direction converges to the
// dominant-real-part eigenvector; lambda comes from the Rayleigh quotient.
FlowResult solve_flow_right_only(const CMatrix& A, const CVector& x0,
                                 const SolverConfig& cfg) {
  auto rhs = [&](const CVector& x) {
    CVector Ax = matvec(A, x);
    const double nn = norm2(x);
    const cplx xAx = inner(x, Ax);
    CVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = nn * nn * Ax[i] - xAx * x[i];
    return out;
  };

  FlowResult result;
  result.diagnostic = "right-side-only flow (Rayleigh estimator, no left vector)";
  double next_check_t = kStagnationArmTime;
  int strikes = 0;
  bool converged = false;
  auto monitor = [&](double t, const CVector& x) {
    const double nx = norm2(x);
    if (nx == 0.0) return false;
    const cplx lambda = inner(x, matvec(A, x)) / (nx * nx);
    const double res = residual(A, lambda, x) / nx;
    if (result.trace.samples.empty() || t > result.trace.samples.back().t_or_iter)
      result.trace.samples.push_back({t, lambda, res, res});
    if (res < cfg.delta_tol) {
      converged = true;
      return true;
    }
    if (t >= next_check_t) {
      next_check_t = 2.0 * t;
      double early = std::numeric_limits<double>::infinity();
      double late = std::numeric_limits<double>::infinity();
      for (const ConvergencePoint& p : result.trace.samples) {
        if (p.t_or_iter >= 0.25 * t && p.t_or_iter < 0.5 * t)
          early = std::min(early, p.residual_phi);
        if (p.t_or_iter >= 0.5 * t) late = std::min(late, p.residual_phi);
      }
      if (std::isfinite(early) && std::isfinite(late) &&
          late >= early * (1.0 - kStagnationDecrease)) {
        if (++strikes >= kStagnationStrikes) {
          result.diagnostic += "; residual stagnation across geometric time windows";
          return true;
        }
      } else {
        strikes = 0;
      }
    }
    return false;
  };

  IntegratorConfig icfg = cfg.ode;
  icfg.max_time = cfg.max_time;
  Trajectory tr = integrate(rhs, x0, icfg, monitor);
  const CVector& xf = tr.final_state();
  result.status = converged ? FlowStatus::converged
                  : tr.terminated_by == StopReason::step_underflow
                      ? FlowStatus::step_underflow
                      : FlowStatus::max_time;
  result.pair.lambda = result.trace.samples.empty() ? cplx{0.0, 0.0}
                                                    : result.trace.samples.back().lambda_est;
  result.pair.phi = norm2(xf) > 0.0 ? phase_canonical(normalized(xf)) : xf;
  result.pair.psi.clear();
  return result;
}

}  // namespace

FlowResult solve_flow_from(const CMatrix& A, const CVector& x_phi0, const CVector& x_psi0,
                           const SolverConfig& cfg, const std::vector<BiorthoPair>& found) {
  cfg.validate();
  const std::size_t n = A.order();
  if (x_phi0.size() != n || x_psi0.size() != n)
    throw DimensionError("solve_flow_from: dimension mismatch");
  if (cfg.right_side_only) {
    if (!found.empty())
      throw Error("solve_flow_from: deflation needs left vectors; right_side_only unsupported");
    return solve_flow_right_only(A, x_phi0, cfg);
  }
  const CMatrix Adag = adjoint(A);

  CVector xphi = x_phi0;
  CVector xpsi = x_psi0;

  FlowMonitor mon{A, Adag, cfg, inner(xpsi, xphi)};
  if (std::abs(mon.chi) < cfg.pairing_floor)
    throw PairingError("solve_flow_from: initial pairing below floor");

  // Deflated runs are segmented so numerical reseeding of the found modes can
  // be projected away before it regrows.
  double seg_len = cfg.max_time;
  if (!found.empty()) {
    const double w = real_spread_bound(A);
    const double chi_abs = std::abs(mon.chi);
    if (w * chi_abs > 0.0) seg_len = std::clamp(6.0 / (w * chi_abs), 1e-3, cfg.max_time);
  }

  IntegratorConfig icfg = cfg.ode;
  FlowStatus cap_status = FlowStatus::max_time;
  while (!mon.done) {
    const double remaining = cfg.max_time - mon.t_offset;
    if (remaining <= 0.0) break;
    icfg.max_time = std::min(seg_len, remaining);

    CVector z(2 * n);
    std::copy(xphi.begin(), xphi.end(), z.begin());
    std::copy(xpsi.begin(), xpsi.end(), z.begin() + n);

    FlowState st;
    st.chi = mon.chi;
    auto rhs = [&](const CVector& zz) {
      FlowState s;
      s.chi = st.chi;
      s.x_phi.assign(zz.begin(), zz.begin() + n);
      s.x_psi.assign(zz.begin() + n, zz.end());
      auto [fphi, fpsi] = coupled_rhs(A, s);
      CVector f(2 * n);
      std::copy(fphi.begin(), fphi.end(), f.begin());
      std::copy(fpsi.begin(), fpsi.end(), f.begin() + n);
      return f;
    };

    Trajectory tr = integrate(rhs, z, icfg, std::ref(mon));
    const CVector& zf = tr.final_state();
    xphi.assign(zf.begin(), zf.begin() + n);
    xpsi.assign(zf.begin() + n, zf.end());
    mon.t_offset += tr.final_time();

    if (tr.terminated_by == StopReason::step_underflow) {
      cap_status = FlowStatus::step_underflow;
      mon.diagnostic = "integrator step size underflow";
      break;
    }
    if (tr.terminated_by == StopReason::max_steps) {
      mon.diagnostic = "integrator step budget exhausted";
      break;
    }
    if (mon.done) break;
    if (mon.t_offset >= cfg.max_time) break;

    if (!found.empty()) {
      xphi = project_out_right(std::move(xphi), found);
      xpsi = project_out_left(std::move(xpsi), found);
      cplx chi_new = inner(xpsi, xphi);
      if (std::abs(chi_new) < cfg.pairing_floor) {
        mon.status = FlowStatus::pairing_collapse;
        mon.diagnostic = "pairing collapsed after deflation re-projection";
        mon.done = true;
        break;
      }
      // keep chi real positive (phase of x_psi is free)
      xpsi = scaled(std::abs(chi_new) / std::conj(chi_new), xpsi);
      mon.chi = std::abs(chi_new);
    }
  }

  FlowResult result;
  result.trace = std::move(mon.trace);
  result.status = mon.done ? mon.status : cap_status;
  result.diagnostic = std::move(mon.diagnostic);

  cplx lambda{0.0, 0.0};
  const cplx pairing = inner(xpsi, xphi);
  if (std::abs(pairing) >= cfg.pairing_floor)
    lambda = inner(xpsi, matvec(A, xphi)) / pairing;
  else if (!result.trace.samples.empty())
    lambda = result.trace.samples.back().lambda_est;

  if (result.status == FlowStatus::converged) {
    result.pair = bi_normalize(lambda, xphi, xpsi, cfg.pairing_floor);
  } else {
    result.pair.lambda = lambda;
    result.pair.phi = norm2(xphi) > 0.0 ? normalized(xphi) : xphi;
    result.pair.psi = xpsi;
  }
  return result;
}

FlowResult solve_flow(const CMatrix& A, const SolverConfig& cfg) {
  Rng rng(cfg.seed);
  CVector xphi0 = rng.next_cvector(A.order());
  CVector xpsi0 = cfg.independent_start ? rng.next_cvector(A.order()) : xphi0;
  return solve_flow_from(A, xphi0, xpsi0, cfg);
}

FlowResult solve_flow_smallest(const CMatrix& A, const SolverConfig& cfg) {
  FlowResult r = solve_flow(negate(A), cfg);
  r.pair.lambda = -r.pair.lambda;
  for (ConvergencePoint& p : r.trace.samples) p.lambda_est = -p.lambda_est;
  return r;
}

std::pair<CVector, CVector> deflated_initials(const std::vector<BiorthoPair>& found,
                                              std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    CVector xphi = project_out_right(rng.next_cvector(n), found);
    CVector xpsi = project_out_left(rng.next_cvector(n), found);
    const double scale = std::sqrt(static_cast<double>(n));
    if (norm2(xphi) < 1e-10 * scale || norm2(xpsi) < 1e-10 * scale) {
      if (found.size() >= n)
        throw Error("deflated_initials: found pairs span the whole space");
      continue;
    }
    const cplx pairing = inner(xpsi, xphi);
    if (std::abs(pairing) < 1e-10) continue;  // unusable pairing, redraw
    // rotate x_psi so chi = <x_psi, x_phi> is real positive; the flow then
    // orders eigenvalues by real part, as with the conjugate-paired default
    xpsi = scaled(std::abs(pairing) / std::conj(pairing), xpsi);
    return {std::move(xphi), std::move(xpsi)};
  }
  throw Error("deflated_initials: no usable initial pair after 16 draws");
}

}  // namespace bieig
