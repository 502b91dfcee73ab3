#include "bieig/generators.hpp"

#include <cmath>

#include "bieig/expm.hpp"
#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"
#include "bieig/rng.hpp"

namespace bieig {

namespace {

constexpr double kE1R[7][7] = {
    {0.445, -0.219, 0.489, 0.770, 0.589, -0.00333, 0.950},
    {0.481, -0.892, -0.806, -0.743, -0.641, -0.422, 0.701},
    {-0.735, 0.747, 0.750, -0.879, 0.884, -0.0114, -0.260},
    {0.528, 0.357, 0.707, 0.986, 0.201, 0.320, 0.207},
    {0.899, 0.727, 0.206, -0.792, 0.109, 0.895, 0.672},
    {-0.400, -0.259, -0.988, 0.459, 0.681, 0.843, 0.788},
    {0.326, -0.530, -0.168, 0.141, 0.0158, -0.496, -0.907}};

constexpr double kE1T[7][7] = {
    {0.959, 0.314, -0.237, 0.232, -0.608, 0.199, -0.164},
    {-0.744, -0.112, 0.239, 0.384, -0.132, 0.299, 0.817},
    {0.921, 0.681, -0.302, 0.942, -0.781, 0.908, -0.0566},
    {0.465, -0.641, 0.505, -0.892, -0.830, 0.715, -0.170},
    {-0.807, 0.978, -0.185, -0.619, -0.923, 0.322, -0.690},
    {0.0672, 0.893, 0.620, 0.711, -0.631, -0.636, -0.211},
    {-0.742, -0.0257, 0.536, -0.952, -0.325, 0.0701, 0.196}};

double inv_factorial(std::uint64_t m) {
  if (m > 170) return 0.0;
  double lg = 0.0;
  for (std::uint64_t i = 2; i <= m; ++i) lg += std::log(static_cast<double>(i));
  return std::exp(-lg);
}

}  // namespace

E1Fixture e1_fixture() {
  E1Fixture f{CMatrix(7), CMatrix(7), CMatrix(7)};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      f.R(i, j) = kE1R[i][j];
      f.T(i, j) = kE1T[i][j];
      f.A(i, j) = cplx{kE1R[i][j], kE1T[i][j]};
    }
  return f;
}

CMatrix random_complex(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("random_complex: n must be positive");
  Rng rng(seed);
  CMatrix A(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.next_complex();
  return A;
}

AlphaSequence AlphaSequence::exp_minus_k_squared(std::size_t n) {
  AlphaSequence s;
  s.kind = AlphaKind::exp_minus_k_squared;
  s.values.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double k = static_cast<double>(j + 1);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    s.values[j - 1] = sign * std::exp(-k * k);
  }
  return s;
}

AlphaSequence AlphaSequence::inverse_factorial_k_squared(std::size_t n) {
  AlphaSequence s;
  s.kind = AlphaKind::inverse_factorial_k_squared;
  s.values.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::uint64_t k = static_cast<std::uint64_t>(j + 1);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    s.values[j - 1] = sign * inv_factorial(k * k);
  }
  return s;
}

AlphaSequence AlphaSequence::custom_values(std::vector<cplx> values, cplx alpha0) {
  AlphaSequence s;
  s.kind = AlphaKind::custom;
  s.values = std::move(values);
  s.alpha0 = alpha0;
  return s;
}

std::string AlphaSequence::kind_name() const {
  switch (kind) {
    case AlphaKind::exp_minus_k_squared: return "exp-k2";
    case AlphaKind::inverse_factorial_k_squared: return "k2-factorial";
    case AlphaKind::custom: return "custom";
  }
  return "custom";
}

CMatrix hessenberg(const AlphaSequence& alpha, std::size_t n) {
  if (n < 2) throw DimensionError("hessenberg: n must be at least 2");
  if (alpha.values.size() < n) throw DimensionError("hessenberg: need n sequence values");
  std::vector<cplx> a(n + 1);
  a[0] = alpha.alpha0;
  for (std::size_t j = 1; j <= n; ++j) {
    a[j] = alpha.values[j - 1];
    if (std::abs(a[j]) >= 1.0)
      throw Error("hessenberg: |alpha_" + std::to_string(j) + "| >= 1");
  }
  // rho_j = k_{j-1}/k_j
  std::vector<double> rho(n + 1, 1.0);
  for (std::size_t j = 1; j <= n; ++j) rho[j] = std::sqrt(1.0 - std::norm(a[j]));

  CMatrix D(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      double prod = 1.0;
      for (std::size_t l = i; l < j; ++l) prod *= rho[l];
      D(i - 1, j - 1) = -a[j] * std::conj(a[i - 1]) * prod;
    }
    if (i >= 2) D(i - 1, i - 2) = rho[i - 1];
  }
  return D;
}

void SwansonParams::validate() const {
  if (N == 0) throw Error("swanson: N must be positive");
  const double quarter_pi = std::atan(1.0);
  if (theta == 0.0 || !(theta > -quarter_pi && theta < quarter_pi))
    throw Error("swanson: theta must lie in (-pi/4, pi/4) excluding 0");
}

CMatrix truncated_annihilator(std::size_t N) {
  CMatrix a(N);
  for (std::size_t k = 2; k <= N; ++k) a(k - 2, k - 1) = std::sqrt(static_cast<double>(k - 1));
  return a;
}

CMatrix swanson(const SwansonParams& p) {
  p.validate();
  const std::size_t N = p.N;
  const CMatrix a = truncated_annihilator(N);
  const CMatrix ad = adjoint(a);
  const CMatrix gen = matadd(matmul(a, a), negate(matmul(ad, ad)));  // a^2 - (a+)^2
  const CMatrix T = expm(matscale(cplx{0.0, -0.5 * p.theta}, gen));

  CMatrix h(N);
  for (std::size_t k = 1; k <= N; ++k)
    h(k - 1, k - 1) = (2.0 * static_cast<double>(k - 1) + 1.0) / 2.0;

  // H = (T h) T^{-1} column-wise through the LU of T^T:  T^T H^T = (T h)^T
  const CMatrix W = matmul(T, h);
  const std::size_t n = N;
  CMatrix Tt(n), Wt(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tt(i, j) = T(j, i);
      Wt(i, j) = W(j, i);
    }
  const CMatrix Ht = LuFactorization(Tt).solve_matrix(Wt);
  CMatrix H(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = Ht(j, i);
  return H;
}

bool swanson_checkerboard(const CMatrix& H) {
  const std::size_t n = H.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i + j) % 2 == 1 && std::abs(H(i, j)) >= 1e-12) return false;
  return true;
}

}  // namespace bieig
