#pragma once

// Binomial coefficients modulo a prime via Lucas's theorem, and the entries
// of the lower-triangular matrix G_{p^lam}:
//
//   g_{i,j} = (-1)^(j-1) * C(p^lam - j, i - j)  (mod p),  1 <= j <= i <= p^lam.

#include <cstdint>
#include <vector>

#include "sdcodes/fieldcore.hpp"

namespace sdcodes {

// Digit binomials C(a, b) mod p for 0 <= a, b < p, from factorial tables.
class LucasBinomial {
 public:
  explicit LucasBinomial(Residue p);

  Residue p() const { return p_; }

  // C(n, k) mod p; zero when k > n.
  Residue operator()(std::uint64_t n, std::uint64_t k) const;

 private:
  Residue digit(Residue a, Residue b) const;

  Residue p_;
  std::vector<Residue> fact_;
  std::vector<Residue> inv_fact_;
};

Residue binom_mod_p(std::uint64_t n, std::uint64_t k, Residue p);

// Throws std::out_of_range unless 1 <= j <= i <= p^lam.
Residue g_entry(Residue p, unsigned lam, std::uint64_t i, std::uint64_t j);

}  // namespace sdcodes
