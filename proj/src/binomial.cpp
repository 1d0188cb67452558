#include "sdcodes/binomial.hpp"

#include <stdexcept>

namespace sdcodes {

namespace {

Residue pow_mod(std::uint64_t base, std::uint64_t e, Residue p) {
  std::uint64_t result = 1;
  base %= p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

}  // namespace

LucasBinomial::LucasBinomial(Residue p) : p_(p), fact_(p), inv_fact_(p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("Lucas binomials need a prime modulus");
  fact_[0] = 1;
  for (Residue i = 1; i < p; ++i) fact_[i] = static_cast<Residue>(std::uint64_t{fact_[i - 1]} * i % p);
  inv_fact_[p - 1] = pow_mod(fact_[p - 1], p - 2, p);
  for (Residue i = p - 1; i > 0; --i) {
    inv_fact_[i - 1] = static_cast<Residue>(std::uint64_t{inv_fact_[i]} * i % p);
  }
}

Residue LucasBinomial::digit(Residue a, Residue b) const {
  if (b > a) return 0;
  return static_cast<Residue>(std::uint64_t{fact_[a]} * inv_fact_[b] % p_ * inv_fact_[a - b] % p_);
}

Residue LucasBinomial::operator()(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (k > 0 || n > 0) {
    const Residue c = digit(static_cast<Residue>(n % p_), static_cast<Residue>(k % p_));
    if (c == 0) return 0;
    result = result * c % p_;
    n /= p_;
    k /= p_;
  }
  return static_cast<Residue>(result);
}

Residue binom_mod_p(std::uint64_t n, std::uint64_t k, Residue p) {
  return LucasBinomial(p)(n, k);
}

Residue g_entry(Residue p, unsigned lam, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t size = checked_pow(p, lam);
  if (j < 1 || j > i || i > size) {
    throw std::out_of_range("G entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside the lower triangle of a " + std::to_string(size) + "x" +
                            std::to_string(size) + " matrix");
  }
  const Residue c = binom_mod_p(size - j, i - j, p);
  return (j % 2 == 1 || c == 0) ? c : p - c;
}

}  // namespace sdcodes
