#pragma once

// Brute-force references for the omega module. Nothing here touches the G
// matrices: the reciprocal map is evaluated by polynomial arithmetic, and
// fixed points are found by exhaustive search.

#include <cstdint>
#include <vector>

#include "sdcodes/omega.hpp"

namespace sdcodes::oracle {

inline constexpr std::uint64_t kKernelOracleGuard = 10'000'000;

// x^{-1} b(x^{-1}) by moving to the monomial basis, substituting
// x -> x^{P-1} in F[x]/(x^P - 1) with P = p^lam, multiplying by x^{P-1} and
// re-expanding around x = 1 to l terms.
XPoly reciprocal_oracle(const XPoly& b);

// All B in F_{p^m}^l whose polynomial is fixed by the reciprocal map.
// Throws std::length_error when (p^m)^l exceeds `guard`.
std::vector<std::vector<FqElem>> kernel_oracle(const FieldSpec& field, std::size_t l,
                                               std::uint64_t guard = kKernelOracleGuard);

}  // namespace sdcodes::oracle
