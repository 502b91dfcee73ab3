#include <cstdio>
#include "bieig/power.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/rng.hpp"
using namespace bieig;
int main() {
  for (int fam = 0; fam < 2; ++fam) {
    CMatrix D = fam == 0 ? hessenberg(AlphaSequence::inverse_factorial_k_squared(15), 15)
                         : hessenberg(AlphaSequence::exp_minus_k_squared(15), 15);
    std::printf("=== %s ===\n", fam == 0 ? "k2-factorial" : "exp-k2");
    SolverConfig cfg; cfg.seed = 1; cfg.delta_tol = 1e-10; cfg.max_iter = 5000;
    Rng rng(8);
    PowerResult p0 = power_iterate(D, rng.next_cvector(15), cfg);
    std::printf("plain: status=%d iters=%llu lam=(%.6e,%.1e) diag=%s\n", (int)p0.status,
                (unsigned long long)p0.iterations, p0.pair.lambda.real(),
                p0.pair.lambda.imag(), p0.diagnostic.c_str());
    const double base = std::abs(p0.pair.lambda);
    cfg.delta_tol = 1e-13;
    const cplx phase = std::exp(cplx{0.0, 0.3});
    for (double mag = base * 0.316; mag > 1e-13; mag *= 0.316) {
      try {
        PowerResult pr = shifted_inverse_power(D, mag * phase, rng.next_cvector(15), cfg);
        double bestres = 1e300; cplx bestlam;
        for (auto& s : pr.trace.samples)
          if (s.residual_phi < bestres) { bestres = s.residual_phi; bestlam = s.lambda_est; }
        std::printf("q=%.2e: status=%d it=%4llu lam=(%+.6e,%+.1e) bestres=%.1e\n", mag,
                    (int)pr.status, (unsigned long long)pr.iterations, bestlam.real(),
                    bestlam.imag(), bestres);
      } catch (const Error& e) {
        std::printf("q=%.2e: threw %s\n", mag, e.what());
      }
    }
  }
  return 0;
}
