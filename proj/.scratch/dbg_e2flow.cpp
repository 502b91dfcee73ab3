#include <cstdio>
#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
using namespace bieig;
int main() {
  CMatrix D = hessenberg(AlphaSequence::inverse_factorial_k_squared(15), 15);
  SolverConfig cfg;
  cfg.seed = 1; cfg.delta_tol = 1e-10; cfg.max_time = 1e5; cfg.right_side_only = true;
  FlowResult r = solve_flow(D, cfg);
  std::printf("status=%d diag='%s' lambda=(%.8g,%.8g)\n", (int)r.status, r.diagnostic.c_str(),
              r.pair.lambda.real(), r.pair.lambda.imag());
  std::printf("samples=%zu t_end=%.6g\n", r.trace.samples.size(),
              r.trace.samples.back().t_or_iter);
  int i=0;
  for (auto& s : r.trace.samples) {
    if (i % (r.trace.samples.size()/20+1) == 0 || i+3 > (int)r.trace.samples.size())
      std::printf("  t=%10.4g lam=(%+.6e,%+.6e) res=%.3e\n", s.t_or_iter, s.lambda_est.real(),
                  s.lambda_est.imag(), s.residual_phi);
    ++i;
  }
  return 0;
}
