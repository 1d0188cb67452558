#pragma once

// Shared helpers for the test binaries. The polynomial helpers here work in
// the monomial basis with schoolbook arithmetic, so tests can build ideals
// without going through the library's (x-1)-basis code paths.

#include <cstdint>
#include <random>
#include <vector>

#include "sdcodes/chainring.hpp"
#include "sdcodes/fieldcore.hpp"
#include "sdcodes/matrix.hpp"

namespace testing {

using namespace sdcodes;

// C(n, k) mod p from Pascal's rule.
inline std::vector<std::vector<Residue>> pascal(std::size_t rows, Residue p) {
  std::vector<std::vector<Residue>> t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) t[n][k] = (t[n - 1][k - 1] + t[n - 1][k]) % p;
  }
  return t;
}

// Signed integer literal grid, reduced mod p.
inline MatrixFp grid(Residue p, std::size_t n, std::vector<long long> entries) {
  return MatrixFp(p, n, n, entries);
}

inline FqElem random_element(const FieldSpec& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
  return field.element_at(dist(rng));
}

// Polynomials over F_{p^m}, monomial basis, constant term first.
using Poly = std::vector<FqElem>;

inline Poly poly_mul(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

inline Poly x_minus_1_pow(const FieldSpec& f, std::uint64_t e) {
  Poly r{f.one()};
  const Poly lin{f.neg(f.one()), f.one()};
  for (std::uint64_t i = 0; i < e; ++i) r = poly_mul(f, r, lin);
  return r;
}

// a(x) + u b(x) reduced mod x^n - sign.
inline RVector ring_poly(const FieldSpec& f, const Poly& a, const Poly& b, std::size_t n, int sign = 1) {
  RVector out(n, RElem{f.zero(), f.zero()});
  auto fold = [&](const Poly& src, bool u_part) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      FqElem c = src[i];
      // x^i = sign^{i / n} x^{i mod n}
      if (sign < 0 && (i / n) % 2 == 1) c = f.neg(c);
      FqElem& dst = u_part ? out[i % n].b : out[i % n].a;
      dst = f.add(dst, c);
    }
  };
  fold(a, false);
  fold(b, true);
  return out;
}

}  // namespace testing
