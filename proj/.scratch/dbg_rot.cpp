#include <cstdio>
#include <cmath>
#include "bieig/ode.hpp"
using namespace bieig;
int main() {
  IntegratorConfig c;
  c.rel_tol = 1e-10; c.abs_tol = 1e-12; c.max_time = 1.0;
  auto rot = [](const CVector& y) { return CVector{cplx{0.0, 1.0} * y[0]}; };
  Trajectory t = integrate(rot, CVector{cplx{1.0, 0.0}}, c);
  std::printf("steps=%zu reason=%d err=%.3e\n", t.samples.size(), (int)t.terminated_by,
              std::abs(t.final_state()[0] - std::exp(cplx{0.0, 1.0})));
}
