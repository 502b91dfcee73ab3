#include <cstdio>
#include <cmath>
#include <algorithm>
#include <vector>
#include "bieig/ode.hpp"
using namespace bieig;
int main() {
  auto err = [](double w, double at, double rt) {
    IntegratorConfig c; c.abs_tol = at; c.rel_tol = rt; c.max_time = 3.14159265358979323846;
    auto rhs = [w](const CVector& y) { return CVector{cplx{0, w} * y[0]}; };
    Trajectory t = integrate(rhs, CVector{cplx{1,0}}, c);
    const cplx exact = std::exp(cplx{0, w} * c.max_time);
    return std::abs(t.final_state()[0] - exact);
  };
  for (double rt : {1e-6, 1e-7, 1e-8, 1e-9}) {
    std::vector<double> ratios;
    for (double w : {0.7, 1.0, 1.3, 1.7, 2.3}) {
      double e1 = err(w, rt * 1e-2, rt), e2 = err(w, rt * 0.5e-2, rt * 0.5);
      ratios.push_back(e1 / e2);
      std::printf("  rt=%.0e w=%.1f e1=%.3e e2=%.3e ratio=%.2f\n", rt, w, e1, e2, e1 / e2);
    }
    std::sort(ratios.begin(), ratios.end());
    std::printf("rt=%.0e median ratio = %.2f\n", rt, ratios[2]);
  }
  return 0;
}
