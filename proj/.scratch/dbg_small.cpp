#include <cstdio>
#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
using namespace bieig;
int main() {
  CMatrix A = e1_fixture().A;
  SolverConfig cfg; cfg.seed = 1;
  FlowResult r = solve_flow_smallest(A, cfg);
  std::printf("status=%d diag='%s' lambda=(%.6f,%.6f) samples=%zu t_end=%.4g\n", (int)r.status,
              r.diagnostic.c_str(), r.pair.lambda.real(), r.pair.lambda.imag(),
              r.trace.samples.size(), r.trace.samples.empty()?0.0:r.trace.samples.back().t_or_iter);
  int i = 0;
  for (const auto& s : r.trace.samples) {
    if (i % 25 == 0)
      std::printf("  t=%8.4f lam=(%8.4f,%8.4f) res=(%.3e, %.3e)\n", s.t_or_iter,
                  s.lambda_est.real(), s.lambda_est.imag(), s.residual_phi, s.residual_psi);
    ++i;
  }
  return 0;
}
