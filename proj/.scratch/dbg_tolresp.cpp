#include <cstdio>
#include <cmath>
#include "bieig/ode.hpp"
using namespace bieig;
int main() {
  auto err = [](double at, double rt) {
    IntegratorConfig c; c.abs_tol = at; c.rel_tol = rt; c.max_time = 3.14159265358979323846;
    auto rhs = [](const CVector& y) { return CVector{cplx{0,1} * y[0]}; };
    Trajectory t = integrate(rhs, CVector{cplx{1,0}}, c);
    return std::abs(t.final_state()[0] - cplx{-1,0});
  };
  for (double rt = 1e-5; rt >= 1e-12; rt *= 0.5) {
    std::printf("rel=%.3e err=%.4e\n", rt, err(rt * 1e-2, rt));
  }
  return 0;
}
