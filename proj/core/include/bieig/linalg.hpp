#ifndef BIEIG_LINALG_HPP
#define BIEIG_LINALG_HPP

#include "bieig/types.hpp"

namespace bieig {

// Inner products follow the Dirac convention throughout: inner(f, g) is
// conjugate-linear in the FIRST argument, so inner(f, A*g) == inner(adjoint(A)*f, g).
// Half of the numerical world conjugates the second slot instead; everything in
// this library (biorthogonality, Schwartz quotients, v-norms) assumes this one.

CVector matvec(const CMatrix& A, const CVector& x);
CMatrix adjoint(const CMatrix& A);
cplx inner(const CVector& f, const CVector& g);
double norm2(const CVector& f);

/// <y,Ay>/<y,y>; throws on the zero vector.
cplx rayleigh(const CMatrix& A, const CVector& y);

/// <x_psi, A x_phi> / <x_psi, x_phi>; exact eigenvalue on an equilibrium pair.
/// Throws PairingError when |<x_psi,x_phi>| < pairing_floor (loss of biorthogonality).
cplx bi_rayleigh(const CMatrix& A, const CVector& x_psi, const CVector& x_phi,
                 double pairing_floor = 1e-12);

/// ||A x - lambda x||.
double residual(const CMatrix& A, cplx lambda, const CVector& x);

/// ||f||_v = sup_j |<v_j, f>| over a complete set of left vectors.
double v_norm(const CVector& f, const std::vector<CVector>& v);

// Dense helpers shared by the solvers.
CMatrix matmul(const CMatrix& A, const CMatrix& B);
CMatrix matadd(const CMatrix& A, const CMatrix& B);
CMatrix matscale(cplx s, const CMatrix& A);
CMatrix negate(const CMatrix& A);
double norm_inf(const CMatrix& A);     // max row sum
double max_abs_entry(const CMatrix& A);
bool is_hermitian(const CMatrix& A, double tol);

CVector axpy(cplx a, const CVector& x, const CVector& y);  // a*x + y
CVector scaled(cplx a, const CVector& x);
CVector vsub(const CVector& x, const CVector& y);
CVector vadd(const CVector& x, const CVector& y);
CVector normalized(const CVector& x);
bool all_finite(const CVector& x);
bool all_finite(const CMatrix& A);

/// Rotates x so its largest-modulus component is real positive. Identity on
/// the zero vector.
CVector phase_canonical(const CVector& x);

/// Scales (phi, psi) so ||phi|| = 1 and <psi, phi> = 1. Throws PairingError if
/// the pairing is degenerate relative to pairing_floor * ||psi||.
BiorthoPair bi_normalize(cplx lambda, const CVector& phi, const CVector& psi,
                         double pairing_floor = 1e-12);

}  // namespace bieig

#endif
