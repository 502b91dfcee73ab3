#include <doctest.h>

#include <cmath>

#include "bieig/expm.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"
#include "bieig/rng.hpp"

using namespace bieig;

TEST_CASE("lu_solve basics") {
  CHECK(norm2(vsub(lu_solve(CMatrix::identity(3), CVector{cplx{1, 2}, cplx{3, 0}, cplx{0, -1}}),
                   CVector{cplx{1, 2}, cplx{3, 0}, cplx{0, -1}})) == 0.0);

  CMatrix D(2);
  D(0, 0) = 2.0;
  D(1, 1) = 4.0;
  CVector x = lu_solve(D, CVector{cplx{2, 0}, cplx{8, 0}});
  CHECK(x[0] == cplx{1, 0});
  CHECK(x[1] == cplx{2, 0});
}

TEST_CASE("lu_solve round trip on a random 7x7 system") {
  const CMatrix A = random_complex(7, 2024);
  Rng rng(9);
  const CVector b = rng.next_cvector(7);
  const CVector x = lu_solve(A, b);
  CHECK(norm2(vsub(matvec(A, x), b)) / norm2(b) < 1e-10);
}

TEST_CASE("lu round trip across random well-conditioned instances") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 2 + seed % 7;
    CMatrix A = random_complex(n, seed);
    for (std::size_t i = 0; i < n; ++i) A(i, i) += cplx{3.0, 0.0};  // keep it well conditioned
    Rng rng(seed + 1000);
    const CVector b = rng.next_cvector(n);
    const CVector x = lu_solve(A, b);
    CHECK(norm2(vsub(matvec(A, x), b)) / norm2(b) < 1e-10);
  }
}

TEST_CASE("lu adjoint solve and determinant") {
  const CMatrix A = random_complex(6, 55);
  LuFactorization lu(A);
  Rng rng(14);
  const CVector b = rng.next_cvector(6);
  const CVector y = lu.solve_adjoint(b);
  CHECK(norm2(vsub(matvec(adjoint(A), y), b)) / norm2(b) < 1e-10);

  // determinant against the 2x2 closed form
  CMatrix B(2);
  B(0, 0) = cplx{1, 2};
  B(0, 1) = cplx{3, -1};
  B(1, 0) = cplx{0, 1};
  B(1, 1) = cplx{-2, 0};
  const cplx det = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
  CHECK(std::abs(LuFactorization(B).determinant() - det) < 1e-13 * std::abs(det));
}

TEST_CASE("lu pivot floor carries the elimination step") {
  CMatrix S(2);
  S(0, 0) = 1.0;
  S(0, 1) = 2.0;
  S(1, 0) = 0.5;
  S(1, 1) = 1.0;  // rank one
  try {
    LuFactorization lu(S);
    CHECK(false);
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot_index == 1);
  }
}

TEST_CASE("expm trivial cases") {
  CHECK(expm(CMatrix(3)) == CMatrix::identity(3));

  CMatrix D(2);
  D(0, 0) = cplx{0.3, -1.2};
  D(1, 1) = cplx{-2.0, 0.4};
  const CMatrix E = expm(D);
  CHECK(std::abs(E(0, 0) - std::exp(D(0, 0))) < 1e-14);
  CHECK(std::abs(E(1, 1) - std::exp(D(1, 1))) < 1e-14);
  CHECK(std::abs(E(0, 1)) == 0.0);
}

TEST_CASE("expm inverse identity and unitarity") {
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    CMatrix M = random_complex(5, seed);
    M = matscale(cplx{10.0 / std::max(1.0, norm_inf(M)), 0.0}, M);  // ||M|| <= 10
    const CMatrix P = matmul(expm(M), expm(negate(M)));
    const CMatrix I5 = CMatrix::identity(5);
    double dev = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) dev = std::max(dev, std::abs(P(i, j) - I5(i, j)));
    CHECK(dev < 1e-10);
  }

  // skew-Hermitian generator -> unitary exponential
  CMatrix G = random_complex(6, 8);
  G = matscale(cplx{0.5, 0.0}, matadd(G, negate(adjoint(G))));  // (G - G*)/2
  const CMatrix U = expm(G);
  const CMatrix UtU = matmul(adjoint(U), U);
  double dev = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      dev = std::max(dev, std::abs(UtU(i, j) - (i == j ? cplx{1, 0} : cplx{0, 0})));
  CHECK(dev < 1e-12);
}

TEST_CASE("expm reproduces the Swanson similarity entry") {
  // T h T^{-1} built from the exponential matches the reference (1,1) entry
  const CMatrix H = swanson(SwansonParams{7, 0.4});
  CHECK(H(0, 0).real() == doctest::Approx(0.348126).epsilon(1e-3));
  CHECK(std::abs(H(0, 0).imag()) < 1e-9);
}
