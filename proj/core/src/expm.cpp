#include "bieig/expm.hpp"

#include <cmath>

#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"

namespace bieig {

CMatrix expm(const CMatrix& M) {
  const std::size_t n = M.order();
  if (n == 0) throw DimensionError("expm: empty matrix");
  if (!all_finite(M)) throw Error("expm: non-finite input");

  const double nrm = norm_inf(M);
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const double scale = std::ldexp(1.0, -s);
  CMatrix X = matscale(cplx{scale, 0.0}, M);

  // [6/6] Pade: N = sum c_k X^k, D = sum (-1)^k c_k X^k.
  constexpr int q = 6;
  CMatrix N = CMatrix::identity(n);
  CMatrix D = CMatrix::identity(n);
  CMatrix P = CMatrix::identity(n);
  double c = 1.0;
  for (int k = 1; k <= q; ++k) {
    c *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
    P = matmul(P, X);
    N = matadd(N, matscale(cplx{c, 0.0}, P));
    D = matadd(D, matscale(cplx{(k % 2 == 0) ? c : -c, 0.0}, P));
  }
  CMatrix R = LuFactorization(D).solve_matrix(N);
  for (int k = 0; k < s; ++k) R = matmul(R, R);
  return R;
}

}  // namespace bieig
