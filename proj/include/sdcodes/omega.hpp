#pragma once

// Polynomials in F_{p^m}[x] / ((x-1)^l) written in the (x-1)-adic basis, the
// reciprocal map b(x) -> x^{-1} b(x^{-1}) on them, and the closed-form basis
// of its fixed points whose first delta coordinates vanish.

#include <cstddef>
#include <span>
#include <vector>

#include "sdcodes/fieldcore.hpp"
#include "sdcodes/gmatrix.hpp"

namespace sdcodes {

// b(x) = sum_i coeffs[i] (x-1)^i modulo (x-1)^l, with l = coeffs.size().
struct XPoly {
  FieldSpec field;
  std::vector<FqElem> coeffs;

  XPoly(FieldSpec f, std::size_t l) : field(std::move(f)), coeffs(l, field.zero()) {}
  XPoly(FieldSpec f, std::vector<FqElem> c) : field(std::move(f)), coeffs(std::move(c)) {}

  std::size_t l() const { return coeffs.size(); }
  bool is_zero() const;

  friend bool operator==(const XPoly&, const XPoly&) = default;
};

// G_l B_l, i.e. the (x-1)-adic coefficients of x^{-1} b(x^{-1}) mod (x-1)^l.
XPoly reciprocal_transform(const XPoly& b);

enum class BasisDirection { to_standard, to_xm1 };

// Exact change of basis between sum c_k x^k and sum b_i (x-1)^i.
std::vector<FqElem> basis_convert(const FieldSpec& field, std::span<const FqElem> coeffs,
                                  BasisDirection direction);

// F_{p^m}-basis of the fixed vectors (0, .., 0, b_delta, .., b_{l-1}),
// stored without their leading delta zeros. An empty vector list is the
// zero-dimensional space {0}.
struct SBasis {
  FieldSpec field;
  std::size_t l = 0;
  std::size_t delta = 0;
  std::vector<UpsilonVec> vectors;

  std::size_t dimension() const { return vectors.size(); }
  // First j of the Upsilon_{2j-1} range; vectors[i] has j = first_j() + i.
  std::size_t first_j() const { return (delta + 1) / 2 + 1; }
};

// Requires 0 <= delta < l; throws std::invalid_argument otherwise.
SBasis s_basis(const FieldSpec& field, std::size_t l, std::size_t delta);

// sum_i params[i] * vectors[i], length l - delta.
std::vector<FqElem> combine(const SBasis& basis, std::span<const FqElem> params);

// combine() placed at offset delta of a length-l polynomial.
XPoly embed(const SBasis& basis, std::span<const FqElem> params);

// True iff b_0 = .. = b_{delta-1} = 0 and (G_l - I_l) B_l = 0.
bool s_membership(const XPoly& b, std::size_t delta);

// Rank of the basis vectors (entries lie in F_p, so this is also the
// F_{p^m}-rank).
std::size_t basis_rank(const SBasis& basis);

}  // namespace sdcodes
