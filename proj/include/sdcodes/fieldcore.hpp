#pragma once

// Exact arithmetic in F_p and F_{p^m} = F_p[w] / (f(w)).
//
// Elements are coefficient vectors over F_p (constant term first). Residues
// live in [0, p), so -1 is stored as p - 1.

#include <compare>
#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "sdcodes/simd.hpp"

namespace sdcodes {

using Residue = simd::Residue;

bool is_prime(std::uint64_t n);

// Checked p^e; throws std::overflow_error when the result exceeds 2^62.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

// a^{-1} mod prime p; throws std::domain_error when a == 0 mod p.
Residue inverse_mod(Residue a, Residue p);

struct FqElem {
  std::vector<Residue> coeffs;

  friend bool operator==(const FqElem&, const FqElem&) = default;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

class FieldSpec {
 public:
  // Validates that p is an odd prime below simd::kMaxKernelPrime, that the
  // modulus is monic of degree m and that it is irreducible over F_p.
  FieldSpec(Residue p, unsigned m, std::vector<Residue> modulus);

  Residue p() const { return p_; }
  unsigned m() const { return m_; }
  const std::vector<Residue>& modulus() const { return modulus_; }

  // p^m
  std::uint64_t order() const { return order_; }

  FqElem zero() const { return FqElem{std::vector<Residue>(m_, 0)}; }
  FqElem one() const;
  FqElem from_int(std::int64_t value) const;
  // Validates length and range of the coefficients.
  FqElem element(std::vector<Residue> coeffs) const;

  // Integer encoding: index = sum_t c_t p^t.
  FqElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FqElem& a) const;

  bool is_zero(const FqElem& a) const;
  bool contains(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem scale(const FqElem& a, Residue c) const;
  // Throws std::domain_error for a == 0.
  FqElem inv(const FqElem& a) const;
  FqElem pow(const FqElem& a, std::uint64_t e) const;

  // Reduces a polynomial in w of any length modulo the field modulus.
  FqElem reduce(std::vector<Residue> poly) const;

  std::string to_string(const FqElem& a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Residue p_;
  unsigned m_;
  std::vector<Residue> modulus_;
  std::uint64_t order_;
};

// Monic irreducible of degree m over F_p that is smallest under the integer
// encoding sum_t c_t p^t of its non-leading coefficients. Deterministic.
FieldSpec find_irreducible(Residue p, unsigned m);

// Ben-Or irreducibility test over F_p. `poly` is constant-term first.
bool is_irreducible(const std::vector<Residue>& poly, Residue p);

// All p^m elements in index order, starting at zero.
inline auto fq_enumerate(const FieldSpec& field) {
  return std::views::iota(std::uint64_t{0}, field.order()) |
         std::views::transform([&field](std::uint64_t i) { return field.element_at(i); });
}

// Parses "c0:c1:...:c_{m-1}" (low degree first); a bare integer is accepted
// and reduced mod p when m == 1 or treated as the constant term otherwise.
FqElem parse_element(const FieldSpec& field, std::string_view text);

}  // namespace sdcodes
