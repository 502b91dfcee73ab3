#include <cstdio>
#include "bieig/ode.hpp"
#include "bieig/linalg.hpp"
using namespace bieig;

int main() {
  IntegratorConfig cfg;
  cfg.max_time = 1.0;
  auto rhs = [](const CVector& y) { return CVector{-y[0]}; };
  Trajectory t = integrate(rhs, CVector{cplx{1.0, 0.0}}, cfg);
  std::printf("reason=%d steps=%zu t=%.15g y=%.15g err=%.3e\n", (int)t.terminated_by,
              t.samples.size(), t.final_time(), t.final_state()[0].real(),
              std::abs(t.final_state()[0].real() - std::exp(-1.0)));

  IntegratorConfig c2;
  c2.max_time = 3.14159265358979323846;
  auto rot = [](const CVector& y) { return CVector{cplx{0.0, 1.0} * y[0]}; };
  Trajectory t2 = integrate(rot, CVector{cplx{1.0, 0.0}}, c2);
  std::printf("reason=%d steps=%zu t=%.15g y=(%.15g,%.15g) err=%.3e\n", (int)t2.terminated_by,
              t2.samples.size(), t2.final_time(), t2.final_state()[0].real(),
              t2.final_state()[0].imag(), std::abs(t2.final_state()[0] - cplx{-1.0, 0.0}));
  return 0;
}
