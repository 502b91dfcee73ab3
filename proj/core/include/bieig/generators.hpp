#ifndef BIEIG_GENERATORS_HPP
#define BIEIG_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "bieig/types.hpp"

namespace bieig {

/// The fixed 7x7 test matrix A = R + iT with both factors given entrywise.
struct E1Fixture {
  CMatrix R;
  CMatrix T;
  CMatrix A;
};
E1Fixture e1_fixture();

/// Dense matrix with independent real/imaginary parts uniform on [-1, 1];
/// deterministic per seed across platforms.
CMatrix random_complex(std::size_t n, std::uint64_t seed);

enum class AlphaKind { exp_minus_k_squared, inverse_factorial_k_squared, custom };

/// Coefficient sequence for the Hessenberg generator. The built-in kinds
/// resolve to the convention that reproduces the reference eigenvalues:
/// alpha_j = (-1)^(j+1) f(j+1) with f the nominal decay law (the j=1 head of
/// the factorial law has |alpha|=1 and cannot enter the construction), and
/// alpha0 = 1. Custom sequences are taken literally.
struct AlphaSequence {
  AlphaKind kind = AlphaKind::custom;
  std::vector<cplx> values;  // alpha_1 .. alpha_n
  cplx alpha0 = cplx{1.0, 0.0};

  static AlphaSequence exp_minus_k_squared(std::size_t n);
  static AlphaSequence inverse_factorial_k_squared(std::size_t n);
  static AlphaSequence custom_values(std::vector<cplx> values, cplx alpha0 = cplx{1.0, 0.0});

  std::string kind_name() const;
};

/// Upper Hessenberg D{alpha}: D(i,j) = -(k_{i-1}/k_{j-1}) alpha_j conj(alpha_{i-1})
/// for i <= j, subdiagonal k_{j-1}/k_j = sqrt(1-|alpha_j|^2) > 0, zeros below.
/// Requires |alpha_k| < 1; alpha == 0 yields exactly the right-shift matrix.
CMatrix hessenberg(const AlphaSequence& alpha, std::size_t n);

struct SwansonParams {
  std::size_t N = 7;
  double theta = 0.4;  // in (-pi/4, pi/4), nonzero

  void validate() const;
};

/// Truncated Swanson Hamiltonian H_theta = T h T^{-1} with h = diag(k - 1/2)
/// and T = exp(-i(theta/2)(a^2 - (a+)^2)) over the truncated ladder
/// a e_k = sqrt(k-1) e_{k-1}. Non-Hermitian with exactly the spectrum of h.
/// (Ladder convention and exponent scaling are pinned by the reference matrix
/// at N=7, theta=0.4, which this construction reproduces entrywise.)
CMatrix swanson(const SwansonParams& p);

/// Truncated annihilator a (superdiagonal sqrt(1)..sqrt(N-1)).
CMatrix truncated_annihilator(std::size_t N);

/// True iff entries vanish (<1e-12) exactly on the odd (i+j) parity positions,
/// the block structure the squeeze-type similarity preserves.
bool swanson_checkerboard(const CMatrix& H);

}  // namespace bieig

#endif
