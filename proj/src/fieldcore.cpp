#include "sdcodes/fieldcore.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sdcodes {

namespace {

using Poly = std::vector<Residue>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

Residue inverse_mod(Residue a, Residue p) {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo " + std::to_string(p));
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

namespace {

// a mod b over F_p; b must be nonzero after trimming.
Poly poly_mod(Poly a, const Poly& b, Residue p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Residue lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<Residue>((a[shift + i] + (p - f) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, Residue p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<Residue>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_gcd(Poly a, Poly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) throw std::overflow_error("integer power exceeds 2^62");
    result *= base;
  }
  return result;
}

bool is_irreducible(const std::vector<Residue>& poly, Residue p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // x^(p^i) mod f for i = 1 .. deg/2; f is irreducible iff none of
  // gcd(f, x^(p^i) - x) is a proper factor.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    Poly acc{1};
    Poly base = h;
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(Residue p, unsigned m, std::vector<Residue> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)), order_(0) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (p >= simd::kMaxKernelPrime) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " exceeds the supported bound " +
                                std::to_string(simd::kMaxKernelPrime));
  }
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (modulus_.size() != m + 1 || modulus_.back() != 1) {
    throw std::invalid_argument("field modulus must be monic of degree m");
  }
  for (Residue c : modulus_) {
    if (c >= p) throw std::invalid_argument("field modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p)) throw std::invalid_argument("field modulus is reducible");
  order_ = checked_pow(p, m);
}

FqElem FieldSpec::one() const {
  FqElem r = zero();
  r.coeffs[0] = 1;
  return r;
}

FqElem FieldSpec::from_int(std::int64_t value) const {
  FqElem r = zero();
  const std::int64_t pp = p_;
  r.coeffs[0] = static_cast<Residue>(((value % pp) + pp) % pp);
  return r;
}

FqElem FieldSpec::element(std::vector<Residue> coeffs) const {
  FqElem r{std::move(coeffs)};
  if (!contains(r)) throw std::invalid_argument("not an element of F_" + std::to_string(order_));
  return r;
}

FqElem FieldSpec::element_at(std::uint64_t index) const {
  if (index >= order_) throw std::out_of_range("field element index out of range");
  FqElem r = zero();
  for (unsigned t = 0; t < m_; ++t) {
    r.coeffs[t] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return r;
}

std::uint64_t FieldSpec::index_of(const FqElem& a) const {
  std::uint64_t index = 0;
  for (unsigned t = m_; t-- > 0;) index = index * p_ + a.coeffs[t];
  return index;
}

bool FieldSpec::is_zero(const FqElem& a) const {
  for (Residue c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldSpec::contains(const FqElem& a) const {
  if (a.coeffs.size() != m_) return false;
  for (Residue c : a.coeffs) {
    if (c >= p_) return false;
  }
  return true;
}

FqElem FieldSpec::add(const FqElem& a, const FqElem& b) const {
  FqElem r = zero();
  for (unsigned t = 0; t < m_; ++t) r.coeffs[t] = (a.coeffs[t] + b.coeffs[t]) % p_;
  return r;
}

FqElem FieldSpec::sub(const FqElem& a, const FqElem& b) const {
  FqElem r = zero();
  for (unsigned t = 0; t < m_; ++t) r.coeffs[t] = (a.coeffs[t] + p_ - b.coeffs[t]) % p_;
  return r;
}

FqElem FieldSpec::neg(const FqElem& a) const {
  FqElem r = zero();
  for (unsigned t = 0; t < m_; ++t) r.coeffs[t] = (p_ - a.coeffs[t]) % p_;
  return r;
}

FqElem FieldSpec::scale(const FqElem& a, Residue c) const {
  FqElem r = zero();
  for (unsigned t = 0; t < m_; ++t) {
    r.coeffs[t] = static_cast<Residue>(std::uint64_t{a.coeffs[t]} * c % p_);
  }
  return r;
}

FqElem FieldSpec::reduce(std::vector<Residue> poly) const {
  // Monic modulus: w^m = -(f_0 + f_1 w + ... + f_{m-1} w^{m-1}).
  for (std::size_t top = poly.size(); top-- > m_;) {
    const std::uint64_t c = poly[top] % p_;
    if (c == 0) continue;
    poly[top] = 0;
    const std::size_t shift = top - m_;
    for (unsigned t = 0; t < m_; ++t) {
      poly[shift + t] = static_cast<Residue>((poly[shift + t] + (p_ - c) * modulus_[t]) % p_);
    }
  }
  poly.resize(m_, 0);
  for (auto& c : poly) c %= p_;
  return FqElem{std::move(poly)};
}

FqElem FieldSpec::mul(const FqElem& a, const FqElem& b) const {
  if (m_ == 1) {
    return FqElem{{static_cast<Residue>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p_)}};
  }
  std::vector<Residue> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<Residue>((prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_);
    }
  }
  return reduce(std::move(prod));
}

FqElem FieldSpec::pow(const FqElem& a, std::uint64_t e) const {
  FqElem result = one();
  FqElem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FqElem FieldSpec::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_" + std::to_string(order_));
  if (m_ == 1) return FqElem{{inverse_mod(a.coeffs[0], p_)}};
  return pow(a, order_ - 2);
}

std::string FieldSpec::to_string(const FqElem& a) const {
  std::string out;
  for (unsigned t = 0; t < a.coeffs.size(); ++t) {
    if (t) out += ':';
    out += std::to_string(a.coeffs[t]);
  }
  return out;
}

FieldSpec find_irreducible(Residue p, unsigned m) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (m == 1) return FieldSpec(p, 1, {0, 1});
  const std::uint64_t candidates = checked_pow(p, m);
  std::vector<Residue> poly(m + 1, 0);
  poly[m] = 1;
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::uint64_t rest = code;
    for (unsigned t = 0; t < m; ++t) {
      poly[t] = static_cast<Residue>(rest % p);
      rest /= p;
    }
    if (poly[0] == 0) continue;  // divisible by w
    if (is_irreducible(poly, p)) return FieldSpec(p, m, poly);
  }
  throw std::logic_error("no irreducible polynomial found");
}

FqElem parse_element(const FieldSpec& field, std::string_view text) {
  FqElem r = field.zero();
  std::size_t t = 0;
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("empty field element");
  while (true) {
    const std::size_t end = text.find(':', pos);
    std::string_view part = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
    }
    if (t >= field.m()) {
      throw std::invalid_argument("field element '" + std::string(text) + "' has more than m coefficients");
    }
    const std::int64_t pp = field.p();
    r.coeffs[t++] = static_cast<Residue>(((value % pp) + pp) % pp);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return r;
}

}  // namespace sdcodes
