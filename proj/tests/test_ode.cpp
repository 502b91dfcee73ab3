#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bieig/flow.hpp"
#include "bieig/linalg.hpp"
#include "bieig/ode.hpp"

using namespace bieig;

TEST_CASE("scalar linear decay reaches e^{-1} within 1e-8") {
  IntegratorConfig cfg;
  cfg.max_time = 1.0;
  auto rhs = [](const CVector& y) { return CVector{-y[0]}; };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg);
  CHECK(tr.terminated_by == StopReason::max_time);
  CHECK(tr.final_time() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(tr.final_state()[0] - cplx{std::exp(-1.0), 0.0}) < 1e-8);
}

TEST_CASE("rotation keeps modulus and lands on -1 at t = pi") {
  IntegratorConfig cfg;
  cfg.max_time = 3.14159265358979323846;
  auto rhs = [](const CVector& y) { return CVector{cplx{0, 1} * y[0]}; };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg);
  CHECK(std::abs(tr.final_state()[0] - cplx{-1, 0}) < 1e-8);
  for (const auto& [t, y] : tr.samples) CHECK(std::abs(std::abs(y[0]) - 1.0) < 1e-7);
}

TEST_CASE("Hermitian flow endpoint matches the closed-form limit") {
  CMatrix A(2);
  A(0, 0) = 3.0;
  A(1, 1) = 1.0;
  IntegratorConfig cfg;
  cfg.max_time = 30.0;
  auto rhs = [&](const CVector& x) { return hermitian_rhs(A, x); };
  Trajectory tr = integrate(rhs, CVector{cplx{0.6, 0}, cplx{0.8, 0}}, cfg);
  CHECK(std::abs(tr.final_state()[0] - cplx{1, 0}) < 1e-6);
  CHECK(std::abs(tr.final_state()[1]) < 1e-6);
}

TEST_CASE("halving both tolerances improves the endpoint by at least 2x") {
  auto endpoint_error = [](double abs_tol, double rel_tol) {
    IntegratorConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_time = 3.14159265358979323846;
    auto rhs = [](const CVector& y) { return CVector{cplx{0, 1} * y[0]}; };
    Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg);
    return std::abs(tr.final_state()[0] - cplx{-1, 0});
  };
  const double e1 = endpoint_error(1e-8, 1e-6);
  const double e2 = endpoint_error(5e-9, 5e-7);
  CHECK(e2 * 2.0 <= e1);
}

TEST_CASE("samples are strictly increasing, finite, and deterministic") {
  IntegratorConfig cfg;
  cfg.max_time = 5.0;
  auto rhs = [](const CVector& y) {
    return CVector{y[1], -y[0] - cplx{0.1, 0.0} * y[1]};
  };
  const CVector y0{cplx{1, 0}, cplx{0, 0.5}};
  Trajectory a = integrate(rhs, y0, cfg);
  Trajectory b = integrate(rhs, y0, cfg);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].first == b.samples[i].first);
    CHECK(a.samples[i].second == b.samples[i].second);
    if (i > 0) CHECK(a.samples[i].first > a.samples[i - 1].first);
    CHECK(all_finite(a.samples[i].second));
  }
}

TEST_CASE("rhs is never evaluated outside [t0, t_final + one step]") {
  // augment the state with a clock so the (autonomous) field can see time
  IntegratorConfig cfg;
  cfg.max_time = 2.0;
  double max_seen = -1.0;
  double min_seen = 1e300;
  auto rhs = [&](const CVector& y) {
    max_seen = std::max(max_seen, y[1].real());
    min_seen = std::min(min_seen, y[1].real());
    return CVector{-y[0], cplx{1.0, 0.0}};
  };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}, cplx{0, 0}}, cfg);
  double max_dt = 0.0;
  for (std::size_t i = 1; i < tr.samples.size(); ++i)
    max_dt = std::max(max_dt, tr.samples[i].first - tr.samples[i - 1].first);
  CHECK(min_seen >= 0.0);
  CHECK(max_seen <= tr.final_time() + max_dt * 2.0 + 1e-12);
}

TEST_CASE("stop predicate fires at the first accepted step satisfying it") {
  IntegratorConfig cfg;
  cfg.max_time = 100.0;
  auto rhs = [](const CVector& y) { return CVector{-y[0]}; };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg,
                            [](double, const CVector& y) { return std::abs(y[0]) < 0.5; });
  CHECK(tr.terminated_by == StopReason::stop_predicate);
  CHECK(std::abs(tr.final_state()[0]) < 0.5);
  // one step earlier the predicate did not hold
  REQUIRE(tr.samples.size() >= 2);
  CHECK(std::abs(tr.samples[tr.samples.size() - 2].second[0]) >= 0.5);
}

TEST_CASE("NaN from the vector field is an explicit failure") {
  IntegratorConfig cfg;
  auto rhs = [](const CVector& y) {
    return CVector{y[0] * std::numeric_limits<double>::quiet_NaN()};
  };
  CHECK_THROWS_AS(integrate(rhs, CVector{cplx{1, 0}}, cfg), Error);
}

TEST_CASE("blow-up ends in step underflow with a partial trajectory") {
  IntegratorConfig cfg;
  cfg.max_time = 10.0;
  cfg.max_steps = 100000;
  // finite-time blow-up at t = 1/3: step size collapses approaching it
  auto rhs = [](const CVector& y) { return CVector{cplx{3.0, 0.0} * y[0] * y[0]}; };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg);
  CHECK((tr.terminated_by == StopReason::step_underflow ||
         tr.terminated_by == StopReason::max_steps));
  CHECK(tr.final_time() < 0.3334);
  CHECK(tr.samples.size() > 1);
}

TEST_CASE("caps are reported") {
  IntegratorConfig cfg;
  cfg.max_steps = 5;
  cfg.max_time = 1e9;
  cfg.max_step = 0.25;
  auto rhs = [](const CVector& y) { return CVector{cplx{0, 1} * y[0]}; };
  Trajectory tr = integrate(rhs, CVector{cplx{1, 0}}, cfg);
  CHECK(tr.terminated_by == StopReason::max_steps);
  CHECK(tr.samples.size() == 6);  // initial sample + 5 accepted steps
}

TEST_CASE("config validation") {
  IntegratorConfig bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  IntegratorConfig skew;
  skew.abs_tol = 1e-2;
  skew.rel_tol = 1e-8;
  CHECK_THROWS_AS(skew.validate(), Error);
}
