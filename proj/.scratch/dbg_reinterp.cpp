#include <cstdio>
#include <cmath>
#include "bieig/ode.hpp"
#include "bieig/linalg.hpp"
using namespace bieig;

int main() {
  // order check at pinned tolerances: integrate y' = iy to t=1 with various tol
  for (double rt : {1e-6, 1e-8, 1e-10, 1e-12}) {
    IntegratorConfig c;
    c.rel_tol = rt;
    c.abs_tol = rt * 1e-2;
    c.max_time = 1.0;
    auto rot = [](const CVector& y) { return CVector{cplx{0.0, 1.0} * y[0]}; };
    Trajectory t = integrate(rot, CVector{cplx{1.0, 0.0}}, c);
    const cplx exact = std::exp(cplx{0.0, 1.0});
    std::printf("rel_tol=%.0e steps=%4zu err=%.3e reason=%d\n", rt, t.samples.size(),
                std::abs(t.final_state()[0] - exact), (int)t.terminated_by);
  }
  // smooth nonlinear scalar: y' = y^2, y0=0.5, t=1 -> y = 1/(2-t) = 1
  {
    IntegratorConfig c;
    c.max_time = 1.0;
    auto rhs = [](const CVector& y) { return CVector{y[0] * y[0]}; };
    Trajectory t = integrate(rhs, CVector{cplx{0.5, 0.0}}, c);
    std::printf("riccati: steps=%zu err=%.3e\n", t.samples.size(),
                std::abs(t.final_state()[0] - cplx{1.0, 0.0}));
  }
  // stiff-ish linear system with spread eigenvalues, like the flow jacobian
  {
    IntegratorConfig c;
    c.max_time = 20.0;
    auto rhs = [](const CVector& y) {
      return CVector{cplx{-12.0, 3.0} * y[0], cplx{-0.3, -1.0} * y[1]};
    };
    Trajectory t = integrate(rhs, CVector{cplx{1.0, 0.0}, cplx{1.0, 0.0}}, c);
    const cplx e0 = std::exp(cplx{-12.0, 3.0} * 20.0), e1 = std::exp(cplx{-0.3, -1.0} * 20.0);
    std::printf("linear2: reason=%d steps=%zu err0=%.3e err1=%.3e\n", (int)t.terminated_by,
                t.samples.size(), std::abs(t.final_state()[0] - e0),
                std::abs(t.final_state()[1] - e1));
  }
  return 0;
}
