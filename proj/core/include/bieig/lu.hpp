#ifndef BIEIG_LU_HPP
#define BIEIG_LU_HPP

#include "bieig/types.hpp"

namespace bieig {

/// LU factorization with partial pivoting. A pivot whose modulus falls below
/// pivot_floor_rel * max|A_ij| raises SingularMatrixError carrying the step.
class LuFactorization {
public:
  explicit LuFactorization(const CMatrix& A, double pivot_floor_rel = 1e-14);

  std::size_t order() const { return lu_.order(); }

  /// Solves A x = b.
  CVector solve(const CVector& b) const;
  /// Solves adjoint(A) x = b reusing the same factors.
  CVector solve_adjoint(const CVector& b) const;
  /// Solves A X = B column by column.
  CMatrix solve_matrix(const CMatrix& B) const;

  cplx determinant() const;

private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;
  int perm_sign_ = 1;
};

CVector lu_solve(const CMatrix& A, const CVector& b, double pivot_floor_rel = 1e-14);

}  // namespace bieig

#endif
