#include <cstdio>
#include "bieig/flow.hpp"
#include "bieig/power.hpp"
#include "bieig/rng.hpp"
using namespace bieig;
int main() {
  // real-part tie: diag(1+i, 1-i, 0)
  CMatrix A(3);
  A(0,0)=cplx{1,1}; A(1,1)=cplx{1,-1}; A(2,2)=0.0;
  SolverConfig cfg; cfg.seed = 3; cfg.max_time = 2000; cfg.ode.max_time = 2000;
  FlowResult r = solve_flow(A, cfg);
  std::printf("flow tie: status=%d diag='%s' t_end=%.4g\n", (int)r.status, r.diagnostic.c_str(),
              r.trace.samples.back().t_or_iter);
  // modulus tie: diag(1, -1, 0.3)
  CMatrix B(3);
  B(0,0)=1.0; B(1,1)=-1.0; B(2,2)=0.3;
  Rng rng(5);
  PowerResult p = power_iterate(B, rng.next_cvector(3), cfg);
  std::printf("power tie: status=%d iters=%llu diag='%s'\n", (int)p.status,
              (unsigned long long)p.iterations, p.diagnostic.c_str());
  return 0;
}
