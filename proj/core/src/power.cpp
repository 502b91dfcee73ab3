#include "bieig/power.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"
#include "bieig/rng.hpp"

namespace bieig {

namespace {

constexpr std::size_t kTieWindow = 50;
constexpr double kTieImprovement = 0.01;
constexpr double kTieDirectionChange = 1e-3;

CVector deflate_right(CVector x, const std::vector<BiorthoPair>& found) {
  for (int pass = 0; pass < 2; ++pass)
    for (const BiorthoPair& p : found) {
      const cplx c = inner(p.psi, x);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * p.phi[i];
    }
  return x;
}

CVector deflate_left(CVector y, const std::vector<BiorthoPair>& found) {
  for (int pass = 0; pass < 2; ++pass)
    for (const BiorthoPair& p : found) {
      const cplx c = inner(p.phi, y);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * p.psi[i];
    }
  return y;
}

struct TieDetector {
  double block_best = std::numeric_limits<double>::infinity();
  double prev_block_best = std::numeric_limits<double>::infinity();
  double block_max_dir = 0.0;
  std::size_t count = 0;

  bool update(double res, double dir_change) {
    block_best = std::min(block_best, res);
    block_max_dir = std::max(block_max_dir, dir_change);
    if (++count < kTieWindow) return false;
    bool tie = std::isfinite(prev_block_best) &&
               block_best >= prev_block_best * (1.0 - kTieImprovement) &&
               block_max_dir > kTieDirectionChange;
    prev_block_best = block_best;
    block_best = std::numeric_limits<double>::infinity();
    block_max_dir = 0.0;
    count = 0;
    return tie;
  }
};

// Shared engine: power iteration under `apply` (right) / `apply_adj` (left),
// with lambda recovered from the Schwartz quotient via `to_lambda` and
// residuals measured against the original matrix A.
PowerResult iterate_engine(const CMatrix& A, const CMatrix& Adag,
                           const std::function<CVector(const CVector&)>& apply,
                           const std::function<CVector(const CVector&)>& apply_adj,
                           const std::function<cplx(cplx)>& to_lambda, const CVector& x0,
                           const SolverConfig& cfg, const std::vector<BiorthoPair>& deflated) {
  cfg.validate();
  const std::size_t n = A.order();
  if (x0.size() != n) throw DimensionError("power: dimension mismatch");
  if (norm2(x0) == 0.0) throw Error("power: zero initial vector");

  PowerResult out;
  CVector z = x0;
  if (!deflated.empty()) z = deflate_vector(z, deflated);
  z = phase_canonical(normalized(z));
  CVector w = z;  // adjoint-side sequence starts from the same vector

  bool degenerate_pairing = false;
  TieDetector tie;
  for (std::uint64_t it = 1; it <= cfg.max_iter; ++it) {
    out.iterations = it;
    CVector Bz = apply(z);
    CVector Bw = apply_adj(w);
    const cplx den = inner(w, z);
    cplx lambda;
    if (std::abs(den) >= cfg.pairing_floor) {
      lambda = to_lambda(inner(w, Bz) / den);
    } else {
      // Schwartz denominator is numerical noise (nearly self-orthogonal pair,
      // extreme non-normality). The Rayleigh quotient of the right iterate is
      // exact at an eigenvector regardless of normality and its error is
      // bounded by the residual, so it takes over as the estimator.
      degenerate_pairing = true;
      lambda = rayleigh(A, z);
    }

    const double res_phi = residual(A, lambda, z);
    const double res_psi = residual(Adag, std::conj(lambda), w);
    out.trace.samples.push_back({static_cast<double>(it), lambda, res_phi, res_psi});

    const double res_stop = degenerate_pairing ? res_phi : std::max(res_phi, res_psi);
    if (res_stop < cfg.delta_tol) {
      out.status = PowerStatus::converged;
      try {
        out.pair = bi_normalize(lambda, z, w, cfg.pairing_floor);
      } catch (const PairingError&) {
        out.pair = BiorthoPair{lambda, phase_canonical(normalized(z)), normalized(w)};
        out.diagnostic =
            "left/right pairing numerically degenerate; psi is unit-norm, not bi-normalized";
      }
      if (degenerate_pairing && out.diagnostic.empty())
        out.diagnostic = "Schwartz denominator collapsed; Rayleigh estimator used";
      return out;
    }

    const double nz = norm2(Bz);
    const double nw = norm2(Bw);
    if (nz < 1e-290 || nw < 1e-290) {
      out.status = PowerStatus::breakdown;
      out.diagnostic = "iterate norm underflow (nilpotent-like action)";
      return out;
    }
    CVector z_next = phase_canonical(scaled(cplx{1.0 / nz, 0.0}, Bz));
    CVector w_next = phase_canonical(scaled(cplx{1.0 / nw, 0.0}, Bw));
    if (!deflated.empty() &&
        it % static_cast<std::uint64_t>(cfg.reorthogonalize_every) == 0) {
      z_next = phase_canonical(normalized(deflate_right(std::move(z_next), deflated)));
      w_next = phase_canonical(normalized(deflate_left(std::move(w_next), deflated)));
    }
    const double dir_change = norm2(vsub(z_next, z));
    if (tie.update(std::max(res_phi, res_psi), dir_change)) {
      out.status = PowerStatus::dominance_tie;
      out.diagnostic = "residual plateau with oscillating direction (|lambda_1|=|lambda_2|?)";
      return out;
    }
    z = std::move(z_next);
    w = std::move(w_next);
  }
  out.status = PowerStatus::max_iter;
  out.diagnostic = "iteration cap reached";
  return out;
}

bool close_eigenvalue(cplx a, cplx b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-6 * scale;
}

}  // namespace

cplx schwartz_quotient(const CMatrix& A, const CVector& x_phi_k, const CVector& x_psi_k,
                       double pairing_floor) {
  return bi_rayleigh(A, x_psi_k, x_phi_k, pairing_floor);
}

PowerResult power_iterate(const CMatrix& A, const CVector& x0, const SolverConfig& cfg,
                          const std::vector<BiorthoPair>& deflated) {
  const CMatrix Adag = adjoint(A);
  return iterate_engine(
      A, Adag, [&](const CVector& v) { return matvec(A, v); },
      [&](const CVector& v) { return matvec(Adag, v); }, [](cplx mu) { return mu; }, x0, cfg,
      deflated);
}

PowerResult adjoint_power_iterate(const CMatrix& A, const CVector& y0, const SolverConfig& cfg,
                                  const std::vector<BiorthoPair>& deflated) {
  // roles swapped: the primary iterate runs under A*, the secondary under A
  std::vector<BiorthoPair> swapped;
  swapped.reserve(deflated.size());
  for (const BiorthoPair& p : deflated)
    swapped.push_back(BiorthoPair{std::conj(p.lambda), p.psi, p.phi});
  const CMatrix Adag = adjoint(A);
  PowerResult r = iterate_engine(
      Adag, A, [&](const CVector& v) { return matvec(Adag, v); },
      [&](const CVector& v) { return matvec(A, v); }, [](cplx mu) { return mu; }, y0, cfg,
      swapped);
  // report in terms of A: psi is the converged A* eigenvector, lambda conjugated back
  std::swap(r.pair.phi, r.pair.psi);
  r.pair.lambda = std::conj(r.pair.lambda);
  for (ConvergencePoint& p : r.trace.samples) {
    p.lambda_est = std::conj(p.lambda_est);
    std::swap(p.residual_phi, p.residual_psi);
  }
  if (r.status == PowerStatus::converged)
    r.pair = bi_normalize(r.pair.lambda, r.pair.phi, r.pair.psi, cfg.pairing_floor);
  return r;
}

CVector deflate_vector(const CVector& x, const std::vector<BiorthoPair>& found) {
  CVector r = deflate_right(x, found);
  if (norm2(r) < 1e-10 * norm2(x))
    throw Error("deflate_vector: trial vector lies in the deflated span; re-seed");
  return r;
}

PowerResult shifted_inverse_power(const CMatrix& A, cplx q, const CVector& x0,
                                  const SolverConfig& cfg,
                                  const std::vector<BiorthoPair>& deflated) {
  const std::size_t n = A.order();
  CMatrix Aq = A;
  for (std::size_t i = 0; i < n; ++i) Aq(i, i) -= q;
  // zero relative pivot floor: inverse iteration wants near-singular solves
  // (their error aligns with the wanted eigenvector); only an exact zero pivot
  // is a hard failure
  LuFactorization lu = [&]() {
    try {
      return LuFactorization(Aq, 0.0);
    } catch (const SingularMatrixError& e) {
      throw Error(std::string("shifted_inverse_power: shift hits the spectrum (") + e.what() +
                  "); perturb the shift");
    }
  }();
  const CMatrix Adag = adjoint(A);
  return iterate_engine(
      A, Adag, [&](const CVector& v) { return lu.solve(v); },
      [&](const CVector& v) { return lu.solve_adjoint(v); },
      [q](cplx mu) { return q + cplx{1.0, 0.0} / mu; }, x0, cfg, deflated);
}

BiorthoPair refine_pair(const CMatrix& A, BiorthoPair p) {
  const std::size_t n = A.order();
  const double scale = std::max(1.0, norm_inf(A));
  try {
    for (int sweep = 0; sweep < 2; ++sweep) {
      CMatrix As = A;
      const cplx shift = p.lambda + cplx{1e-10 * scale, 0.0};
      for (std::size_t i = 0; i < n; ++i) As(i, i) -= shift;
      LuFactorization lu(As, 0.0);
      p.phi = normalized(lu.solve(p.phi));
      p.psi = normalized(lu.solve_adjoint(p.psi));
      p.lambda = bi_rayleigh(A, p.psi, p.phi);
    }
    return bi_normalize(p.lambda, p.phi, p.psi);
  } catch (const Error&) {
    return p;  // keep the unrefined pair if the polish breaks down
  }
}

SpectrumResult full_spectrum(const CMatrix& A, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = A.order();
  SpectrumResult out;
  if (n == 0) return out;

  Rng rng(cfg.seed);
  const std::uint64_t max_attempts = 10 * static_cast<std::uint64_t>(n) + 10;
  std::uint64_t attempts = 0;

  auto try_add = [&](const PowerResult& r, const std::string& how) {
    if (r.status != PowerStatus::converged) {
      out.diagnostics.push_back(how + ": " + (r.diagnostic.empty() ? "failed" : r.diagnostic));
      return false;
    }
    for (const BiorthoPair& p : out.pairs)
      if (close_eigenvalue(p.lambda, r.pair.lambda)) {
        out.diagnostics.push_back(how + ": duplicate of an already found eigenvalue");
        return false;
      }
    // sharpened pairs keep the residual floor of later deflated runs low
    out.pairs.push_back(refine_pair(A, r.pair));
    return true;
  };

  // dominant chain: power iteration in the biorthogonal complement of what is found
  bool chain_alive = true;
  while (chain_alive && out.pairs.size() < n && attempts < max_attempts) {
    ++attempts;
    CVector x0 = rng.next_cvector(n);
    try {
      x0 = deflate_vector(x0, out.pairs);
    } catch (const Error&) {
      continue;
    }
    PowerResult r = power_iterate(A, x0, cfg, out.pairs);
    if (!try_add(r, "power chain")) chain_alive = false;
  }

  // shifted sweeps over the Gershgorin disk union for whatever is left
  std::vector<std::pair<cplx, double>> disks(n);
  for (std::size_t i = 0; i < n; ++i) {
    double rad = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rad += std::abs(A(i, j));
    disks[i] = {A(i, i), rad};
  }
  while (out.pairs.size() < n && attempts < max_attempts) {
    ++attempts;
    const std::size_t di = static_cast<std::size_t>(rng.next_unit() * n) % n;
    const double rr = disks[di].second * std::sqrt(rng.next_unit());
    const double th = 2.0 * 3.14159265358979323846 * rng.next_unit();
    const cplx q = disks[di].first + cplx{rr * std::cos(th), rr * std::sin(th)};
    bool near_found = false;
    for (const BiorthoPair& p : out.pairs)
      if (close_eigenvalue(p.lambda, q)) near_found = true;
    if (near_found) continue;
    // shifted runs rely on shift selection rather than deflation: projecting
    // against imperfect pairs would floor the residual above tight delta_tol
    CVector x0 = rng.next_cvector(n);
    try {
      PowerResult r = shifted_inverse_power(A, q, x0, cfg);
      try_add(r, "shifted sweep");
    } catch (const Error& e) {
      out.diagnostics.push_back(std::string("shifted sweep: ") + e.what());
    }
  }

  std::sort(out.pairs.begin(), out.pairs.end(), [](const BiorthoPair& a, const BiorthoPair& b) {
    return std::abs(a.lambda) > std::abs(b.lambda);
  });
  if (out.pairs.size() < n)
    out.diagnostics.push_back("found " + std::to_string(out.pairs.size()) + " of " +
                              std::to_string(n) + " pairs within the attempt budget");
  return out;
}

}  // namespace bieig
