#include "sdcodes/omega.hpp"

#include <stdexcept>
#include <string>

namespace sdcodes {

bool XPoly::is_zero() const {
  for (const auto& c : coeffs) {
    if (!field.is_zero(c)) return false;
  }
  return true;
}

XPoly reciprocal_transform(const XPoly& b) {
  const std::size_t l = b.l();
  XPoly out(b.field, l);
  if (l == 0) return out;
  const MatrixFp g = g_truncated(b.field.p(), l);
  for (std::size_t i = 0; i < l; ++i) {
    FqElem acc = b.field.zero();
    // G_l is lower triangular.
    for (std::size_t j = 0; j <= i; ++j) {
      const Residue gij = g(i, j);
      if (gij != 0) acc = b.field.add(acc, b.field.scale(b.coeffs[j], gij));
    }
    out.coeffs[i] = std::move(acc);
  }
  return out;
}

std::vector<FqElem> basis_convert(const FieldSpec& field, std::span<const FqElem> coeffs,
                                  BasisDirection direction) {
  const std::size_t n = coeffs.size();
  std::vector<FqElem> out(n, field.zero());
  // Horner in the target basis. Multiplying by (x - 1) in the monomial basis
  // is shift-and-subtract; multiplying by (y + 1) with y = x - 1 in the
  // (x-1)-basis is shift-and-add.
  const bool to_standard = direction == BasisDirection::to_standard;
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = n - 1; i > 0; --i) {
      out[i] = to_standard ? field.sub(out[i - 1], out[i]) : field.add(out[i - 1], out[i]);
    }
    if (n > 0) out[0] = to_standard ? field.neg(out[0]) : out[0];
    out[0] = field.add(out[0], coeffs[k]);
  }
  return out;
}

SBasis s_basis(const FieldSpec& field, std::size_t l, std::size_t delta) {
  if (delta >= l) {
    throw std::invalid_argument("S basis needs 0 <= delta < l, got delta = " + std::to_string(delta) +
                                ", l = " + std::to_string(l));
  }
  SBasis basis{field, l, delta, {}};
  const MatrixFp g = g_truncated(field.p(), l);
  for (std::size_t j = basis.first_j(); j <= (l + 1) / 2; ++j) {
    basis.vectors.push_back(upsilon(g, j, delta));
  }
  return basis;
}

std::vector<FqElem> combine(const SBasis& basis, std::span<const FqElem> params) {
  if (params.size() != basis.dimension()) {
    throw std::invalid_argument("expected " + std::to_string(basis.dimension()) + " parameters, got " +
                                std::to_string(params.size()));
  }
  const FieldSpec& field = basis.field;
  std::vector<FqElem> out(basis.l - basis.delta, field.zero());
  for (std::size_t t = 0; t < params.size(); ++t) {
    const auto& v = basis.vectors[t].values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out[i] = field.add(out[i], field.scale(params[t], v[i]));
    }
  }
  return out;
}

XPoly embed(const SBasis& basis, std::span<const FqElem> params) {
  auto tail = combine(basis, params);
  XPoly b(basis.field, basis.l);
  for (std::size_t i = 0; i < tail.size(); ++i) b.coeffs[basis.delta + i] = std::move(tail[i]);
  return b;
}

bool s_membership(const XPoly& b, std::size_t delta) {
  for (std::size_t i = 0; i < delta && i < b.l(); ++i) {
    if (!b.field.is_zero(b.coeffs[i])) return false;
  }
  return reciprocal_transform(b) == b;
}

std::size_t basis_rank(const SBasis& basis) {
  if (basis.vectors.empty()) return 0;
  MatrixFp m(basis.field.p(), basis.vectors.size(), basis.l - basis.delta);
  for (std::size_t r = 0; r < basis.vectors.size(); ++r) {
    const auto& v = basis.vectors[r].values;
    std::copy(v.begin(), v.end(), m.row(r).begin());
  }
  return rank_fp(std::move(m));
}

}  // namespace sdcodes
