#ifndef BIEIG_RNG_HPP
#define BIEIG_RNG_HPP

#include <cstdint>

#include "bieig/types.hpp"

namespace bieig {

/// Deterministic splitmix64 generator. std::uniform_real_distribution is not
/// pinned across standard libraries, so the [0,1) mapping is done by hand to
/// keep seeded artifacts byte-identical everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  cplx next_complex() {
    const double re = next_symmetric();
    const double im = next_symmetric();
    return cplx{re, im};
  }

  CVector next_cvector(std::size_t n) {
    CVector x(n);
    for (cplx& v : x) v = next_complex();
    return x;
  }

private:
  std::uint64_t state_;
};

}  // namespace bieig

#endif
