#pragma once

// The involutory matrices G_{p^lam} over F_p, their truncations G_l and the
// odd-indexed columns of G_l + I_l that span the fixed space of the
// reciprocal map.

#include <cstddef>
#include <memory>
#include <vector>

#include "sdcodes/matrix.hpp"

namespace sdcodes {

inline constexpr std::size_t kDefaultGCap = 2048;

// Rows delta+1..l (1-based) of column `source_index` of G_l + I_l.
struct UpsilonVec {
  std::vector<Residue> values;
  std::size_t source_index = 1;  // odd, 1-based: 2j - 1
  std::size_t delta = 0;
  std::size_t l = 0;

  friend bool operator==(const UpsilonVec&, const UpsilonVec&) = default;
};

// Entry formula applied to every lower-triangular position. lam == 0 gives [1].
// Throws std::length_error when p^lam exceeds `cap`.
MatrixFp build_g_direct(Residue p, unsigned lam, std::size_t cap = kDefaultGCap);

// G_p from the entry formula, then G_p (x) G_p (x) ... (x) G_p.
MatrixFp build_g_kron(Residue p, unsigned lam, std::size_t cap = kDefaultGCap);

// Kronecker path for lam >= 2, direct otherwise.
MatrixFp build_g(Residue p, unsigned lam, std::size_t cap = kDefaultGCap);

// Shared, immutable G_{p^lam}; built once per (p, lam) and safe to call from
// several threads.
std::shared_ptr<const MatrixFp> cached_g(Residue p, unsigned lam);

MatrixFp kron(const MatrixFp& a, const MatrixFp& b);

// Upper-left l x l block. Throws std::out_of_range unless 1 <= l <= rows.
MatrixFp truncate_g(const MatrixFp& g, std::size_t l);

// Least lam >= 1 with l <= p^lam.
unsigned least_level(Residue p, std::size_t l);

// G_l cut from G_{p^lam} with lam = least_level(p, l).
MatrixFp g_truncated(Residue p, std::size_t l);

// Valid j run from ceil(delta/2) + 1 to ceil(l/2); throws std::out_of_range
// otherwise or when delta >= l.
UpsilonVec upsilon(const MatrixFp& g_l, std::size_t j, std::size_t delta);

}  // namespace sdcodes
