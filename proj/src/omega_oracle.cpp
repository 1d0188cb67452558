#include "sdcodes/omega_oracle.hpp"

#include <stdexcept>
#include <string>

namespace sdcodes::oracle {

XPoly reciprocal_oracle(const XPoly& b) {
  const FieldSpec& field = b.field;
  const std::size_t l = b.l();
  XPoly out(field, l);
  if (l == 0) return out;

  std::uint64_t period = field.p();
  while (period < l) period *= field.p();

  const auto monomial = basis_convert(field, b.coeffs, BasisDirection::to_standard);

  // x^{-1} * (x^{-1})^k = x^{(k+1)(P-1) mod P} in F[x]/(x^P - 1).
  std::vector<FqElem> image(period, field.zero());
  for (std::size_t k = 0; k < monomial.size(); ++k) {
    const std::uint64_t e = ((k + 1) % period) * (period - 1) % period;
    image[e] = field.add(image[e], monomial[k]);
  }

  // Expand around x = 1, keeping only the first l coefficients; x^P - 1 is
  // (x-1)^P in characteristic p, so this is reduction mod (x-1)^l.
  auto& d = out.coeffs;
  for (std::uint64_t k = period; k-- > 0;) {
    for (std::size_t i = l - 1; i > 0; --i) d[i] = field.add(d[i], d[i - 1]);
    d[0] = field.add(d[0], image[k]);
  }
  return out;
}

std::vector<std::vector<FqElem>> kernel_oracle(const FieldSpec& field, std::size_t l, std::uint64_t guard) {
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (total > guard / q) {
      throw std::length_error("kernel oracle would search more than " + std::to_string(guard) + " vectors");
    }
    total *= q;
  }
  std::vector<std::vector<FqElem>> fixed;
  XPoly b(field, l);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = l; i-- > 0;) {
      b.coeffs[i] = field.element_at(rest % q);
      rest /= q;
    }
    if (reciprocal_oracle(b) == b) fixed.push_back(b.coeffs);
  }
  return fixed;
}

}  // namespace sdcodes::oracle
