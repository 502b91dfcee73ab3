#include <doctest.h>

#include <cmath>

#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"
#include "bieig/oracle.hpp"
#include "bieig/rng.hpp"

using namespace bieig;

TEST_CASE("qr_spectrum on diagonal input is exact") {
  CMatrix D(4);
  D(0, 0) = cplx{3, 1};
  D(1, 1) = cplx{1, -2};
  D(2, 2) = cplx{-1, 0};
  D(3, 3) = cplx{0.5, 0.5};
  const SpectralData s = qr_spectrum(D);
  // sorted by descending real part
  CHECK(s.eigenvalues[0] == cplx{3, 1});
  CHECK(s.eigenvalues[1] == cplx{1, -2});
  CHECK(s.eigenvalues[2] == cplx{0.5, 0.5});
  CHECK(s.eigenvalues[3] == cplx{-1, 0});
}

TEST_CASE("qr_spectrum vs the companion matrix of z^2 - 3z + 2") {
  CMatrix C(2);
  C(0, 0) = 3.0;
  C(0, 1) = -2.0;
  C(1, 0) = 1.0;
  const SpectralData s = qr_spectrum(C);
  CHECK(std::abs(s.eigenvalues[0] - cplx{2, 0}) < 1e-12);
  CHECK(std::abs(s.eigenvalues[1] - cplx{1, 0}) < 1e-12);
}

TEST_CASE("qr_spectrum trace and determinant consistency") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const CMatrix A = random_complex(n, seed * 31);
    const SpectralData s = qr_spectrum(A);
    cplx tr{0, 0}, sum{0, 0};
    for (std::size_t i = 0; i < n; ++i) tr += A(i, i);
    for (const cplx& l : s.eigenvalues) sum += l;
    CHECK(std::abs(sum - tr) < 1e-8 * std::max(1.0, std::abs(tr)));
    const cplx det = LuFactorization(A).determinant();
    cplx prod{1, 0};
    for (const cplx& l : s.eigenvalues) prod *= l;
    CHECK(std::abs(prod - det) < 1e-8 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("qr_spectrum eigenpairs are bi-orthogonal with small residuals") {
  const CMatrix A = e1_fixture().A;
  const SpectralData s = qr_spectrum(A);
  const CMatrix Ad = adjoint(A);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(s.flags[i].converged);
    CHECK(residual(A, s.eigenvalues[i], s.right_vectors[i]) < 1e-8);
    CHECK(residual(Ad, std::conj(s.eigenvalues[i]), s.left_vectors[i]) /
              norm2(s.left_vectors[i]) <
          1e-8);
    for (std::size_t j = 0; j < 7; ++j) {
      const cplx p = inner(s.left_vectors[i], s.right_vectors[j]);
      CHECK(std::abs(p - (i == j ? cplx{1, 0} : cplx{0, 0})) < 1e-8);
    }
  }
}

TEST_CASE("eig_2x2") {
  CMatrix R(2);
  R(0, 1) = 1.0;
  R(1, 0) = -1.0;
  const SpectralData rot = eig_2x2(R);
  CHECK(std::abs(rot.eigenvalues[0] - cplx{0, 1}) < 1e-14);
  CHECK(std::abs(rot.eigenvalues[1] - cplx{0, -1}) < 1e-14);

  CMatrix J(2);
  J(0, 0) = 1.0;
  J(0, 1) = 1.0;
  J(1, 1) = 1.0;
  const SpectralData jod = eig_2x2(J);
  CHECK(jod.flags[0].defective);
  CHECK(std::abs(jod.eigenvalues[0] - cplx{1, 0}) < 1e-12);
  CHECK(std::abs(jod.eigenvalues[1] - cplx{1, 0}) < 1e-12);
}

TEST_CASE("eig_2x2 agrees with qr_spectrum on random instances") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const CMatrix A = random_complex(2, seed);
    const SpectralData a = eig_2x2(A);
    const SpectralData b = qr_spectrum(A);
    CHECK(std::abs(a.eigenvalues[0] - b.eigenvalues[0]) < 1e-10);
    CHECK(std::abs(a.eigenvalues[1] - b.eigenvalues[1]) < 1e-10);
  }
}

TEST_CASE("closed_form_flow recovers the initial condition at t = 0") {
  const CMatrix A = e1_fixture().A;
  const SpectralData s = qr_spectrum(A);
  std::vector<cplx> c0(7);
  Rng rng(21);
  for (auto& c : c0) c = cplx{rng.next_symmetric(), 0.0};
  const CVector x0 = closed_form_flow(s, c0, 0.0);
  CVector expect(7, cplx{0, 0});
  for (std::size_t k = 0; k < 7; ++k)
    expect = axpy(c0[k], s.right_vectors[k], expect);
  CHECK(norm2(vsub(x0, expect)) < 1e-10 * norm2(expect));
}

TEST_CASE("closed_form_flow limit for diag(3,1)") {
  CMatrix A(2);
  A(0, 0) = 3.0;
  A(1, 1) = 1.0;
  const SpectralData s = qr_spectrum(A);
  // c ordered to match the oracle's eigenvalue order (3 first)
  const std::vector<cplx> c0{cplx{0.6, 0}, cplx{0.8, 0}};
  const CVector xinf = closed_form_flow(s, c0, 50.0);
  CHECK(std::abs(xinf[0] - cplx{1.0, 0.0}) < 1e-8);  // ||x0|| e_1 with ||x0|| = 1
  CHECK(std::abs(xinf[1]) < 1e-8);
}

TEST_CASE("closed_form_flow satisfies the coupled ODE (finite differences)") {
  const CMatrix A = e1_fixture().A;
  const SpectralData s = qr_spectrum(A);
  std::vector<cplx> c0(7);
  Rng rng(33);
  double chi = 0.0;
  for (auto& c : c0) {
    c = cplx{rng.next_symmetric(), 0.0};
    chi += c.real() * c.real();
  }
  for (double t : {0.3, 0.7}) {
    const double h = 1e-5;
    const CVector xm = closed_form_flow(s, c0, t - h);
    const CVector xp = closed_form_flow(s, c0, t + h);
    CVector fd(7);
    for (std::size_t i = 0; i < 7; ++i) fd[i] = (xp[i] - xm[i]) / (2.0 * h);

    // x_psi(t) = sum conj(c_k(t)) psi_k; c_k(t) from the phi expansion
    const CVector x = closed_form_flow(s, c0, t);
    FlowState st;
    st.chi = cplx{chi, 0.0};
    st.x_phi = x;
    st.x_psi = CVector(7, cplx{0, 0});
    for (std::size_t k = 0; k < 7; ++k) {
      const cplx ck = inner(s.left_vectors[k], x);
      st.x_psi = axpy(std::conj(ck), s.left_vectors[k], st.x_psi);
    }
    const auto [fphi, fpsi] = coupled_rhs(A, st);
    CHECK(norm2(vsub(fd, fphi)) < 1e-4 * std::max(1.0, norm2(fphi)));
  }
}

TEST_CASE("closed_form_flow rejects bad coefficient vectors") {
  CMatrix A(2);
  A(0, 0) = 1.0;
  A(1, 1) = 2.0;
  const SpectralData s = qr_spectrum(A);
  CHECK_THROWS(closed_form_flow(s, {cplx{0, 0}, cplx{0, 0}}, 1.0));
  CHECK_THROWS(closed_form_flow(s, {cplx{1, 0.5}, cplx{0, 0}}, 1.0));
  CHECK_THROWS_AS(closed_form_flow(s, {cplx{1, 0}}, 1.0), DimensionError);
}
