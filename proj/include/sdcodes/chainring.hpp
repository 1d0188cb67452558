#pragma once

// Arithmetic in R = F_{p^m} + u F_{p^m} (u^2 = 0) and an independent
// verification engine for ideals of R[x] / (x^N - sign).
//
// An ideal generated by g_1, .., g_r is, as an F_{p^m}-space, spanned by
// x^i g_a and u x^i g_a for 0 <= i < N. Each such word c = a + u b is split
// into the length-2N vector (a | b); everything below is linear algebra
// over F_{p^m} on those vectors.

#include <cstddef>
#include <vector>

#include "sdcodes/fq_vector.hpp"

namespace sdcodes {

struct RElem {
  FqElem a;
  FqElem b;  // coefficient of u

  friend bool operator==(const RElem&, const RElem&) = default;
  friend auto operator<=>(const RElem&, const RElem&) = default;
};

using RVector = std::vector<RElem>;

class ChainRing {
 public:
  explicit ChainRing(FieldSpec field) : field_(std::move(field)) {}

  const FieldSpec& field() const { return field_; }

  RElem zero() const { return {field_.zero(), field_.zero()}; }
  RElem one() const { return {field_.one(), field_.zero()}; }
  RElem u() const { return {field_.zero(), field_.one()}; }
  RElem make(const FqElem& a, const FqElem& b) const { return {a, b}; }

  bool is_zero(const RElem& x) const { return field_.is_zero(x.a) && field_.is_zero(x.b); }
  bool is_unit(const RElem& x) const { return !field_.is_zero(x.a); }

  RElem add(const RElem& x, const RElem& y) const;
  RElem sub(const RElem& x, const RElem& y) const;
  RElem neg(const RElem& x) const;
  // (a + ub)(c + ud) = ac + u(ad + bc)
  RElem mul(const RElem& x, const RElem& y) const;

  RVector scale(const RElem& r, const RVector& v) const;

  // sum_i x_i y_i; throws std::invalid_argument on length mismatch.
  RElem inner_product(const RVector& x, const RVector& y) const;

 private:
  FieldSpec field_;
};

// +1: cyclic, modulus x^N - 1.  -1: negacyclic, modulus x^N + 1.
struct RIdealGens {
  int ring_sign = 1;
  std::vector<RVector> generators;  // standard basis, each of length N

  std::size_t length() const { return generators.empty() ? 0 : generators.front().size(); }
};

// Throws std::invalid_argument for an empty list, unequal lengths or a sign
// other than +1 / -1.
void validate(const ChainRing& ring, const RIdealGens& gens);

// x * v in R[x] / (x^N - sign).
RVector shift(const ChainRing& ring, const RVector& v, int ring_sign);

// The 2N-column F_{p^m} spanning set described above.
std::vector<FqVector> spanning_rows(const ChainRing& ring, const RIdealGens& gens);

// dim over F_{p^m}; the ideal has (p^m)^dim elements.
std::size_t span_dimension(const ChainRing& ring, const RIdealGens& gens);

// [x^i g_a, g_b] = 0 for every ordered pair and every shift. Shifting both
// arguments preserves the form (cyclic and negacyclic alike), and the ideal
// is the R-span of the shifted generators, so this covers every pair of
// codewords.
bool is_self_orthogonal(const ChainRing& ring, const RIdealGens& gens);

// Self-orthogonal with |C| = (p^m)^N, i.e. half of R^N.
bool is_self_dual(const ChainRing& ring, const RIdealGens& gens);

// Reduced row-echelon basis of the 2N-column expansion. Two generator sets
// describe the same ideal exactly when their forms compare equal.
struct CanonicalForm {
  std::size_t columns = 0;
  std::vector<FqVector> rows;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const ChainRing& ring, const RIdealGens& gens);

// Splits rows back into generators: row (a | b) becomes a + u b.
RIdealGens generators_of(const ChainRing& ring, const CanonicalForm& form, int ring_sign);

}  // namespace sdcodes
