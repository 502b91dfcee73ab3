#ifndef BIEIG_ODE_HPP
#define BIEIG_ODE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

#include "bieig/types.hpp"

namespace bieig {

struct IntegratorConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double initial_step = 1e-3;
  double max_step = std::numeric_limits<double>::infinity();
  double max_time = 1e4;
  std::uint64_t max_steps = 10'000'000;

  void validate() const;
};

enum class StopReason { stop_predicate, max_time, max_steps, step_underflow };

struct Trajectory {
  std::vector<std::pair<double, CVector>> samples;  // strictly increasing t
  StopReason terminated_by = StopReason::max_time;

  double final_time() const { return samples.back().first; }
  const CVector& final_state() const { return samples.back().second; }
};

using VectorField = std::function<CVector(const CVector&)>;
using StopPredicate = std::function<bool(double, const CVector&)>;

/// Integrates the autonomous system dy/dt = rhs(y) from t = 0 with a
/// variable-order (1..12) Adams-Bashforth-Moulton PECE scheme. Local error per
/// accepted step is controlled against abs_tol + rel_tol*|y_i| componentwise.
/// The stop predicate is evaluated at accepted steps only; integration also
/// ends at max_time (landed exactly), max_steps, or step underflow.
/// Throws Error if rhs produces a non-finite value.
Trajectory integrate(const VectorField& rhs, const CVector& y0, const IntegratorConfig& cfg,
                     const StopPredicate& stop = {});

}  // namespace bieig

#endif
