#ifndef BIEIG_EXPM_HPP
#define BIEIG_EXPM_HPP

#include "bieig/types.hpp"

namespace bieig {

/// Matrix exponential by scaling-and-squaring with a diagonal [6/6] Pade
/// approximant (scaled so ||M/2^s||_inf <= 0.5, where the Pade error is below
/// double rounding).
CMatrix expm(const CMatrix& M);

}  // namespace bieig

#endif
