#include <doctest.h>

#include <cmath>

#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/oracle.hpp"
#include "bieig/rng.hpp"

using namespace bieig;

namespace {

CMatrix diag2(cplx a, cplx b) {
  CMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("matvec identity and diagonal action") {
  CMatrix I3 = CMatrix::identity(3);
  CVector x{cplx{1, 0}, cplx{0, 1}, cplx{-2, 0}};
  CHECK(norm2(vsub(matvec(I3, x), x)) == 0.0);

  CVector y = matvec(diag2(2.0, 3.0), CVector{cplx{1, 0}, cplx{1, 0}});
  CHECK(y[0] == cplx{2, 0});
  CHECK(y[1] == cplx{3, 0});

  CHECK_THROWS_AS(matvec(I3, CVector{cplx{1, 0}}), DimensionError);
}

TEST_CASE("matvec reproduces the oracle eigenrelation on the 7x7 fixture") {
  const CMatrix A = e1_fixture().A;
  const SpectralData spec = qr_spectrum(A);
  const CVector& phi1 = spec.right_vectors[0];
  CHECK(residual(A, spec.eigenvalues[0], phi1) < 1e-8);
}

TEST_CASE("adjoint") {
  CMatrix S(2);
  S(0, 0) = 1.0;
  S(0, 1) = 2.0;
  S(1, 0) = 2.0;
  S(1, 1) = -3.0;
  CHECK(adjoint(S) == S);

  CMatrix N(2);
  N(0, 1) = cplx{0, 1};
  CMatrix Nd = adjoint(N);
  CHECK(Nd(0, 1) == cplx{0, 0});
  CHECK(Nd(1, 0) == cplx{0, -1});
  CHECK(adjoint(adjoint(N)) == N);

  // the Swanson Hamiltonian is visibly non-self-adjoint
  const CMatrix H = swanson(SwansonParams{7, 0.4});
  double dev = 0.0;
  const CMatrix Hd = adjoint(H);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) dev = std::max(dev, std::abs(H(i, j) - Hd(i, j)));
  CHECK(dev > 0.1);
}

TEST_CASE("inner product is conjugate-linear in the first slot") {
  CHECK(inner(CVector{cplx{1, 0}, cplx{0, 0}}, CVector{cplx{0, 0}, cplx{1, 0}}) ==
        cplx{0, 0});
  CHECK(inner(CVector{cplx{0, 1}, cplx{0, 0}}, CVector{cplx{0, 1}, cplx{0, 0}}) ==
        cplx{1, 0});

  // <f, A g> == <adjoint(A) f, g> for random data
  Rng rng(11);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t n = 2 + rep % 6;
    CMatrix A = random_complex(n, 100 + rep);
    CVector f = rng.next_cvector(n), g = rng.next_cvector(n);
    const cplx lhs = inner(f, matvec(A, g));
    const cplx rhs = inner(matvec(adjoint(A), f), g);
    CHECK(std::abs(lhs - rhs) <
          1e-12 * norm2(f) * norm2(g) * std::max(1.0, norm_inf(A)));
  }
}

TEST_CASE("norm2") {
  CHECK(norm2(CVector{cplx{3, 0}, cplx{0, 4}}) == doctest::Approx(5.0));
  CHECK(norm2(CVector{cplx{0, 0}, cplx{0, 0}}) == 0.0);
}

TEST_CASE("rayleigh quotient") {
  CHECK(rayleigh(diag2(5.0, 1.0), CVector{cplx{1, 0}, cplx{0, 0}}) == cplx{5, 0});
  CHECK_THROWS(rayleigh(diag2(1.0, 1.0), CVector{cplx{0, 0}, cplx{0, 0}}));

  // exact for every oracle eigenpair of a normal (Hermitian) matrix
  CMatrix Hm(3);
  Rng rng(7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      const cplx v = rng.next_complex();
      Hm(i, j) = (i == j) ? cplx{v.real(), 0.0} : v;
      if (i != j) Hm(j, i) = std::conj(v);
    }
  const SpectralData spec = qr_spectrum(Hm);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(rayleigh(Hm, spec.right_vectors[i]) - spec.eigenvalues[i]) < 1e-9);

  // scale invariance
  CMatrix A = random_complex(5, 42);
  CVector x = rng.next_cvector(5);
  const cplx r1 = rayleigh(A, x);
  const cplx r2 = rayleigh(A, scaled(cplx{-2.5, 1.25}, x));
  CHECK(std::abs(r1 - r2) < 1e-13 * std::abs(r1));
}

TEST_CASE("bi_rayleigh") {
  CVector e2v{cplx{0, 0}, cplx{1, 0}};
  CHECK(bi_rayleigh(diag2(2.0, 3.0), e2v, e2v) == cplx{3, 0});
  CHECK_THROWS_AS(bi_rayleigh(diag2(1.0, 2.0), CVector{cplx{1, 0}, cplx{0, 0}},
                              CVector{cplx{0, 0}, cplx{1, 0}}),
                  PairingError);
}

TEST_CASE("residual") {
  CHECK(residual(diag2(5.0, 1.0), cplx{5, 0}, CVector{cplx{1, 0}, cplx{0, 0}}) == 0.0);

  // Rayleigh optimality for a normal matrix: residual at the Rayleigh quotient
  // is minimal over a grid of trial eigenvalues
  CMatrix Hm(2);
  Hm(0, 0) = 2.0;
  Hm(1, 1) = -1.0;
  Hm(0, 1) = cplx{0.3, 0.4};
  Hm(1, 0) = cplx{0.3, -0.4};
  Rng rng(19);
  CVector x = rng.next_cvector(2);
  const cplx mu0 = rayleigh(Hm, x);
  const double base = residual(Hm, mu0, x);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      const cplx mu = mu0 + cplx{0.17 * a, 0.13 * b};
      CHECK(base <= residual(Hm, mu, x) + 1e-12);
    }
}

TEST_CASE("v_norm") {
  std::vector<CVector> V{CVector{cplx{1, 0}, cplx{0, 0}}, CVector{cplx{0, 0}, cplx{1, 0}}};
  CHECK(v_norm(CVector{cplx{3, 0}, cplx{0, -4}}, V) == doctest::Approx(4.0));
  CHECK(v_norm(CVector{cplx{0, 0}, cplx{0, 0}}, V) == 0.0);
}

TEST_CASE("v_norm axioms against sampled vectors") {
  // left basis from the oracle on a random 4x4
  const CMatrix A = random_complex(4, 77);
  const SpectralData spec = qr_spectrum(A);
  const std::vector<CVector>& V = spec.left_vectors;
  Rng rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    CVector f = rng.next_cvector(4), g = rng.next_cvector(4);
    const cplx c = rng.next_complex();
    CHECK(v_norm(vadd(f, g), V) <= v_norm(f, V) + v_norm(g, V) + 1e-12);
    CHECK(v_norm(scaled(c, f), V) ==
          doctest::Approx(std::abs(c) * v_norm(f, V)).epsilon(1e-12));
    // definiteness relative to the Euclidean norm (complete basis)
    if (norm2(f) > 1e-6) CHECK(v_norm(f, V) > 0.0);
  }
}

TEST_CASE("phase canonicalization and bi-normalization") {
  Rng rng(5);
  CVector x = rng.next_cvector(6);
  CVector c = phase_canonical(x);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < 6; ++i)
    if (std::abs(c[i]) > std::abs(c[arg])) arg = i;
  CHECK(c[arg].imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c[arg].real() > 0.0);
  CHECK(norm2(c) == doctest::Approx(norm2(x)));

  const CMatrix A = e1_fixture().A;
  const SpectralData spec = qr_spectrum(A);
  BiorthoPair p = bi_normalize(spec.eigenvalues[2], spec.right_vectors[2],
                               scaled(cplx{2.0, -1.0}, spec.left_vectors[2]));
  CHECK(norm2(p.phi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(p.psi, p.phi) - cplx{1, 0}) < 1e-10);
}
