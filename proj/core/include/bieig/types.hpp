#ifndef BIEIG_TYPES_HPP
#define BIEIG_TYPES_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bieig {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {}
  CMatrix(std::size_t n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) throw std::invalid_argument("CMatrix: entry count != n*n");
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t order() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  bool operator==(const CMatrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// Raised when an LU pivot underruns the relative pivot floor; carries the
/// elimination step at which the factorization broke down.
class SingularMatrixError : public Error {
public:
  SingularMatrixError(const std::string& what, std::size_t pivot_index)
      : Error(what), pivot_index(pivot_index) {}
  std::size_t pivot_index;
};

/// Raised when a biorthogonal pairing |<psi,phi>| underruns the pairing floor.
class PairingError : public Error {
public:
  using Error::Error;
};

/// One eigenvalue with bi-normalized right (phi) and left (psi) eigenvectors:
/// ||phi|| = 1 and <psi, phi> = 1.
struct BiorthoPair {
  cplx lambda;
  CVector phi;
  CVector psi;
};

}  // namespace bieig

#endif
