#include "bieig/ode.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <cstdio>
#include <cstdlib>

#include "bieig/linalg.hpp"

namespace bieig {

namespace {

constexpr int kMaxOrder = 12;     // Adams-Bashforth predictor steps
constexpr int kMaxHist = kMaxOrder + 2;

// gamma*_m (Adams-Bashforth, backward difference form) and gamma_m
// (Adams-Moulton). The PECE corrector uses the identity
// AM_{k+1} = AB_k + h*gamma*_k*grad^k f_{n+1}.
struct AdamsCoeffs {
  double gs[kMaxHist + 1];  // gamma*
  double gm[kMaxHist + 1];  // gamma (moulton)
  AdamsCoeffs() {
    for (int m = 0; m <= kMaxHist; ++m) {
      double accs = 0.0, accm = 0.0;
      for (int j = 0; j < m; ++j) {
        accs += gs[j] / static_cast<double>(m + 1 - j);
        accm += gm[j] / static_cast<double>(m + 1 - j);
      }
      gs[m] = 1.0 - accs;
      gm[m] = (m == 0) ? 1.0 : -accm;
    }
  }
};
const AdamsCoeffs kAdams;

double weighted_norm(const CVector& v, const CVector& y, double abs_tol, double rel_tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = abs_tol + rel_tol * std::abs(y[i]);
    worst = std::max(worst, std::abs(v[i]) / w);
  }
  return worst;
}

// Newton interpolation of the f-history (nodes t_n - j*h_old) at new spacing.
std::deque<CVector> reinterpolate(const std::deque<CVector>& hist, double h_old, double h_new) {
  const std::size_t m = hist.size();
  if (m <= 1 || h_old == h_new) return hist;
  std::size_t m_new = 1 + static_cast<std::size_t>(
                              std::floor(static_cast<double>(m - 1) * h_old / h_new + 1e-12));
  m_new = std::min(m_new, static_cast<std::size_t>(kMaxHist));
  m_new = std::max<std::size_t>(m_new, 1);
  const std::size_t dim = hist[0].size();

  // divided-difference table over nodes x_j = -j*h_old
  std::vector<std::vector<CVector>> table(m);
  table[0].assign(hist.begin(), hist.end());
  for (std::size_t lev = 1; lev < m; ++lev) {
    table[lev].resize(m - lev);
    for (std::size_t i = 0; i + lev < m; ++i) {
      table[lev][i] = CVector(dim);
      const double span = static_cast<double>(lev) * h_old;  // x_i - x_{i+lev}
      for (std::size_t d = 0; d < dim; ++d)
        table[lev][i][d] = (table[lev - 1][i][d] - table[lev - 1][i + 1][d]) / span;
    }
  }
  std::deque<CVector> out;
  for (std::size_t j = 0; j < m_new; ++j) {
    const double x = -static_cast<double>(j) * h_new;
    CVector val = table[m - 1][0];
    for (std::size_t lev = m - 1; lev-- > 0;) {
      const double xl = -static_cast<double>(lev) * h_old;
      for (std::size_t d = 0; d < dim; ++d) val[d] = val[d] * (x - xl) + table[lev][0][d];
    }
    out.push_back(std::move(val));
  }
  return out;
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

  auto eval = [&](const CVector& y) {
    CVector f = rhs(y);
    if (f.size() != y0.size()) throw DimensionError("integrate: rhs dimension mismatch");
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

  std::deque<CVector> hist;  // hist[j] = f at t - j*h
  hist.push_back(eval(y));
  int k = 1;
  double h = std::min({cfg.initial_step, cfg.max_step, cfg.max_time});

  std::uint64_t accepted = 0;
  int rejects_in_row = 0;
  const std::size_t dim = y0.size();

  auto set_step = [&](double h_new) {
    hist = reinterpolate(hist, h, h_new);
    h = h_new;
    k = std::min<int>(k, static_cast<int>(hist.size()));
  };

  for (;;) {
    // land exactly on max_time
    bool landing = false;
    {
      double h_eff = std::min(h, cfg.max_step);
      if (t + h_eff >= cfg.max_time) {
        h_eff = cfg.max_time - t;
        landing = true;
      }
      if (h_eff <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
        traj.terminated_by = landing ? StopReason::max_time : StopReason::step_underflow;
        return traj;
      }
      if (h_eff != h) set_step(h_eff);
    }

    const int m = static_cast<int>(hist.size());
    k = std::min(k, m);

    // backward differences of f at t
    std::vector<CVector> diffs(m);
    diffs[0] = hist[0];
    {
      std::vector<CVector> level(hist.begin(), hist.end());
      for (int j = 1; j < m; ++j) {
        for (int i = 0; i + j < m; ++i)
          for (std::size_t d = 0; d < dim; ++d) level[i][d] -= level[i + 1][d];
        diffs[j] = level[0];
      }
    }

    // predict
    CVector p = y;
    for (int j = 0; j < k; ++j)
      for (std::size_t d = 0; d < dim; ++d) p[d] += h * kAdams.gs[j] * diffs[j][d];
    CVector fp = eval(p);

    // differences at the predicted point: dplus[j] = grad^j f(t+h)
    const int jmax = std::min(m, k + 2);
    std::vector<CVector> dplus(static_cast<std::size_t>(jmax) + 1);
    dplus[0] = fp;
    for (int j = 1; j <= jmax; ++j) {
      dplus[j] = dplus[j - 1];
      for (std::size_t d = 0; d < dim; ++d) dplus[j][d] -= diffs[j - 1][d];
    }

    // correct: AM_{k+1} through the PECE identity
    CVector yc = p;
    for (std::size_t d = 0; d < dim; ++d) yc[d] += h * kAdams.gs[k] * dplus[k][d];
    if (!all_finite(yc)) throw Error("integrate: non-finite state produced");

    auto est = [&](int q) -> double {
      if (q < 1 || q > jmax) return -1.0;
      return h * std::abs(kAdams.gm[q]) * weighted_norm(dplus[q], yc, cfg.abs_tol, cfg.rel_tol);
    };
    const int q_ctrl = std::min(k + 1, jmax);
    const double err = est(q_ctrl);

    if (std::getenv("ODEDBG")) std::fprintf(stderr, "t=%.6g h=%.3g k=%d m=%d err=%.3g ek=%.3g ek1=%.3g ek2=%.3g\n", t, h, k, m, err, est(k), est(k+1), est(k+2));
    if (err <= 1.0) {
      t += h;
      y = yc;
      ++accepted;
      CVector fnew = eval(y);
      hist.push_front(std::move(fnew));
      if (static_cast<int>(hist.size()) > kMaxHist) hist.pop_back();
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

      // order selection
      const double e_k = est(k);
      const double e_k1 = est(k + 1);
      const double e_k2 = est(k + 2);
      int k_next = k;
      double h_next = h;
      auto hopt = [&](double e, int q) {
        if (e < 0.0) return -1.0;
        const double safe = 0.9;
        if (e == 0.0) return 2.0 * h;
        return h * safe * std::pow(1.0 / e, 1.0 / (q + 1));
      };
      if (e_k2 >= 0.0 && k < kMaxOrder) {
        const double hd = hopt(e_k, k) * 0.95;
        const double hk = hopt(e_k1, k + 1);
        const double hu = hopt(e_k2, k + 2) * 0.95;
        if (hu > hk && hu >= hd)
          k_next = k + 1, h_next = hu;
        else if (hd > hk)
          k_next = std::max(1, k - 1), h_next = hd;
        else
          h_next = hk;
      } else {
        // ramp-up: raise order while the history allows and errors are easy
        if (err < 0.25 && k < kMaxOrder && k + 1 <= static_cast<int>(hist.size())) k_next = k + 1;
        h_next = hopt(err, q_ctrl);
      }
      k = std::min(k_next, static_cast<int>(hist.size()));
      h_next = std::min(h_next, cfg.max_step);
      h_next = std::clamp(h_next, 0.25 * h, 2.0 * h);
      if (h_next < 0.9 * h || h_next > 1.5 * h) set_step(h_next);
      rejects_in_row = 0;
    } else {
      ++rejects_in_row;
      if (rejects_in_row > 2) k = std::max(1, k / 2);
      double fac = 0.9 * std::pow(1.0 / err, 1.0 / (q_ctrl + 1));
      fac = std::clamp(fac, 0.1, 0.5);
      set_step(h * fac);
    }
  }
}

}  // namespace bieig
