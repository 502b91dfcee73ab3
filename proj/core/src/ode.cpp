#include "bieig/ode.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "bieig/linalg.hpp"

namespace bieig {

namespace {

constexpr int kMaxOrder = 12;           // method order cap (corrector)
constexpr int kMaxHist = kMaxOrder + 1;  // past (t, f) pairs kept

// 7-point Gauss-Legendre on [0,1]: exact for polynomial degree <= 13, which
// covers every Newton-basis integral this scheme needs.
constexpr double kGx[7] = {0.025446043828620737, 0.12923440720030277, 0.29707742431130141,
                           0.5,                  0.70292257568869859, 0.87076559279969723,
                           0.97455395617137926};
constexpr double kGw[7] = {0.064742483084434846, 0.13985269574463833, 0.19091502525255947,
                           0.20897959183673469,  0.19091502525255947, 0.13985269574463833,
                           0.064742483084434846};

double weighted_norm(const CVector& v, const CVector& y, double abs_tol, double rel_tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = abs_tol + rel_tol * std::abs(y[i]);
    worst = std::max(worst, std::abs(v[i]) / w);
  }
  return worst;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(initial_step > 0.0) || !(max_step > 0.0) ||
      !(max_time > 0.0) || max_steps == 0)
    throw Error("IntegratorConfig: all fields must be positive");
  if (abs_tol > rel_tol * 1e3) throw Error("IntegratorConfig: abs_tol > 1e3*rel_tol");
}

Trajectory integrate(const VectorField& rhs, const CVector& y0, const IntegratorConfig& cfg,
                     const StopPredicate& stop) {
  cfg.validate();
  if (y0.empty()) throw DimensionError("integrate: empty initial state");
  if (!all_finite(y0)) throw Error("integrate: non-finite initial state");
  const std::size_t dim = y0.size();

  auto eval = [&](const CVector& y) {
    CVector f = rhs(y);
    if (f.size() != dim) throw DimensionError("integrate: rhs dimension mismatch");
    if (!all_finite(f)) throw Error("integrate: rhs returned non-finite value");
    return f;
  };

  Trajectory traj;
  double t = 0.0;
  CVector y = y0;
  traj.samples.emplace_back(t, y);
  if (stop && stop(t, y)) {
    traj.terminated_by = StopReason::stop_predicate;
    return traj;
  }

  // most recent first: tpast[0] = t, fpast[0] = f(y(t))
  std::deque<double> tpast;
  std::deque<CVector> fpast;
  tpast.push_back(t);
  fpast.push_back(eval(y));

  int k = 1;  // predictor steps; corrector order k+1
  double h = std::min({cfg.initial_step, cfg.max_step, cfg.max_time});
  std::uint64_t accepted = 0;
  int rejects_in_row = 0;
  bool just_rejected = false;

  // scratch reused across steps
  std::vector<CVector> phi;    // phi[j] = f[t_n, ..., t_{n-j}]
  std::vector<CVector> dnew;   // dnew[q] = f[t_{n+1}, t_n, ..., t_{n+1-q}]
  std::vector<double> g;       // g[j] = int_{t_n}^{t_n+h} prod_{l<j} (t - t_{n-l}) dt

  for (;;) {
    const int m = static_cast<int>(tpast.size());
    k = std::clamp(k, 1, std::min(m, kMaxOrder - 1));

    bool landing = false;
    double h_eff = std::min(h, cfg.max_step);
    if (t + h_eff >= cfg.max_time) {
      h_eff = cfg.max_time - t;
      landing = true;
    }
    if (h_eff <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      traj.terminated_by = landing ? StopReason::max_time : StopReason::step_underflow;
      return traj;
    }

    // divided differences of the past values
    phi.assign(static_cast<std::size_t>(m), CVector());
    phi[0] = fpast[0];
    {
      std::vector<CVector> level(fpast.begin(), fpast.end());
      for (int j = 1; j < m; ++j) {
        for (int i = 0; i + j < m; ++i) {
          const double span = tpast[i] - tpast[i + j];
          for (std::size_t d = 0; d < dim; ++d)
            level[i][d] = (level[i][d] - level[i + 1][d]) / span;
        }
        phi[j] = level[0];
      }
    }

    // g[j] by Gauss-Legendre in t = t_n + h_eff*x; every factor is positive
    const int jmax = std::min(m + 1, kMaxHist);  // g needed up to jmax
    g.assign(static_cast<std::size_t>(jmax) + 1, 0.0);
    for (int gp = 0; gp < 7; ++gp) {
      const double tq = t + h_eff * kGx[gp];
      double prod = 1.0;
      g[0] += kGw[gp];  // integrand 1
      for (int j = 1; j <= jmax; ++j) {
        prod *= tq - tpast[j - 1];
        g[static_cast<std::size_t>(j)] += kGw[gp] * prod;
      }
    }
    for (int j = 0; j <= jmax; ++j) g[static_cast<std::size_t>(j)] *= h_eff;

    // predict
    CVector p = y;
    for (int j = 0; j < k; ++j)
      for (std::size_t d = 0; d < dim; ++d) p[d] += g[j] * phi[j][d];
    if (!all_finite(p)) throw Error("integrate: non-finite predictor state");
    CVector fp = eval(p);

    // divided differences through the predicted point
    const double tnew = t + h_eff;
    const int qmax = std::min(m, jmax);  // dnew[q] needs q past nodes
    auto dd_chain = [&](const CVector& f_at_new) {
      dnew.assign(static_cast<std::size_t>(qmax) + 1, CVector());
      dnew[0] = f_at_new;
      for (int q = 1; q <= qmax; ++q) {
        dnew[q] = dnew[q - 1];
        const double span = tnew - tpast[q - 1];
        for (std::size_t d = 0; d < dim; ++d)
          dnew[q][d] = (dnew[q][d] - phi[q - 1][d]) / span;
      }
    };
    dd_chain(fp);

    // correct: AM_{k+1} = AB_k + g_k * f[t_{n+1}, t_n, ..., t_{n-k+1}]
    CVector yc = p;
    for (std::size_t d = 0; d < dim; ++d) yc[d] += g[k] * dnew[k][d];
    if (!all_finite(yc)) throw Error("integrate: non-finite state produced");

    // trailing evaluation of the PECE pair; error and order decisions use the
    // corrected-point differences (predictor-error contamination would other-
    // wise keep the higher-order estimates from ever looking favourable)
    CVector fc = eval(yc);
    dd_chain(fc);

    // E(q): first neglected Newton term at interpolation level q
    auto est = [&](int q) -> double {
      if (q < 1 || q > qmax) return -1.0;
      return std::abs(g[q]) * weighted_norm(dnew[q], yc, cfg.abs_tol, cfg.rel_tol);
    };
    const int q_ctrl = std::min(k + 1, qmax);
    const double err = est(q_ctrl);

    if (err <= 1.0) {
      t = tnew;
      y = yc;
      ++accepted;
      tpast.push_front(t);
      fpast.push_front(std::move(fc));
      if (static_cast<int>(tpast.size()) > kMaxHist) {
        tpast.pop_back();
        fpast.pop_back();
      }
      traj.samples.emplace_back(t, y);

      if (stop && stop(t, y)) {
        traj.terminated_by = StopReason::stop_predicate;
        return traj;
      }
      if (landing || t >= cfg.max_time) {
        traj.terminated_by = StopReason::max_time;
        return traj;
      }
      if (accepted >= cfg.max_steps) {
        traj.terminated_by = StopReason::max_steps;
        return traj;
      }

      // order and step selection from the neighbouring estimates
      auto hfac = [&](double e, int ord) {
        // ord = method order of the candidate; error ~ h^{ord+1}
        if (e < 0.0) return -1.0;
        if (e == 0.0) return 2.0;
        return 0.9 * std::pow(1.0 / e, 1.0 / (ord + 1));
      };
      // sticky order selection: switching must promise a clearly larger step,
      // which keeps the error constant stable across neighbouring tolerances
      const double f_down = hfac(est(k), k) * 0.8;
      const double f_keep = hfac(est(k + 1), k + 1);
      const double f_up = (just_rejected || k >= kMaxOrder - 1 || est(k + 2) < 0.0)
                              ? -1.0
                              : hfac(est(k + 2), k + 2) * 0.8;
      int k_next = k;
      double fac = f_keep;
      if (f_keep < 0.0) fac = hfac(err, q_ctrl);
      if (f_down > fac && f_down >= f_up) {
        k_next = std::max(1, k - 1);
        fac = f_down;
      } else if (f_up > fac) {
        k_next = k + 1;
        fac = f_up;
      }
      if (m + 1 <= k_next) k_next = k;  // history must cover the predictor
      k = k_next;
      // steps are re-priced every step: the variable-step coefficients make
      // h changes free, and tracking the estimate keeps the tolerance
      // response proportional
      h = h_eff * std::clamp(fac, 0.25, 2.0);
      just_rejected = false;
      rejects_in_row = 0;
    } else {
      ++rejects_in_row;
      just_rejected = true;
      if (rejects_in_row > 3) k = std::max(1, k - 2);
      double fac = 0.9 * std::pow(1.0 / err, 1.0 / (q_ctrl + 1));
      h = h_eff * std::clamp(fac, 0.1, 0.5);
    }
  }
}

}  // namespace bieig
