#include <cstdio>
#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/rng.hpp"
using namespace bieig;

int main() {
  CMatrix A = e1_fixture().A;
  SolverConfig cfg;
  cfg.seed = 1;

  // raw integrate of the coupled flow, watch h
  Rng rng(cfg.seed);
  CVector x0 = rng.next_cvector(7);
  CVector z(14);
  std::copy(x0.begin(), x0.end(), z.begin());
  std::copy(x0.begin(), x0.end(), z.begin() + 7);
  cplx chi = inner(x0, x0);
  std::printf("chi = %.6g\n", chi.real());
  auto rhs = [&](const CVector& zz) {
    FlowState s;
    s.chi = chi;
    s.x_phi.assign(zz.begin(), zz.begin() + 7);
    s.x_psi.assign(zz.begin() + 7, zz.end());
    auto [fphi, fpsi] = coupled_rhs(A, s);
    CVector f(14);
    std::copy(fphi.begin(), fphi.end(), f.begin());
    std::copy(fpsi.begin(), fpsi.end(), f.begin() + 7);
    return f;
  };
  IntegratorConfig icfg;
  icfg.max_time = 20.0;
  double tprev = 0.0;
  int count = 0;
  auto watch = [&](double t, const CVector& y) {
    if (count < 60 || count % 50 == 0)
      std::printf("step %4d  t=%.6g  dt=%.3g  |y|=%.4g\n", count, t, t - tprev, norm2(y));
    tprev = t;
    ++count;
    return false;
  };
  Trajectory tr = integrate(rhs, z, icfg, watch);
  std::printf("reason=%d steps=%zu t_end=%.6g\n", (int)tr.terminated_by, tr.samples.size(),
              tr.final_time());
  return 0;
}
