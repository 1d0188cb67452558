#include "sdcodes/chainring.hpp"

#include <stdexcept>
#include <string>

namespace sdcodes {

RElem ChainRing::add(const RElem& x, const RElem& y) const {
  return {field_.add(x.a, y.a), field_.add(x.b, y.b)};
}

RElem ChainRing::sub(const RElem& x, const RElem& y) const {
  return {field_.sub(x.a, y.a), field_.sub(x.b, y.b)};
}

RElem ChainRing::neg(const RElem& x) const { return {field_.neg(x.a), field_.neg(x.b)}; }

RElem ChainRing::mul(const RElem& x, const RElem& y) const {
  return {field_.mul(x.a, y.a), field_.add(field_.mul(x.a, y.b), field_.mul(x.b, y.a))};
}

RVector ChainRing::scale(const RElem& r, const RVector& v) const {
  RVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(mul(r, e));
  return out;
}

RElem ChainRing::inner_product(const RVector& x, const RVector& y) const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("inner product of vectors with lengths " + std::to_string(x.size()) + " and " +
                                std::to_string(y.size()));
  }
  RElem acc = zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i]));
  return acc;
}

void validate(const ChainRing& ring, const RIdealGens& gens) {
  if (gens.ring_sign != 1 && gens.ring_sign != -1) throw std::invalid_argument("ring sign must be +1 or -1");
  if (gens.generators.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  const std::size_t n = gens.length();
  if (n == 0) throw std::invalid_argument("generators must have positive length");
  for (const auto& g : gens.generators) {
    if (g.size() != n) throw std::invalid_argument("generators have different lengths");
    for (const auto& e : g) {
      if (!ring.field().contains(e.a) || !ring.field().contains(e.b)) {
        throw std::invalid_argument("generator coefficient is not a ring element");
      }
    }
  }
}

RVector shift(const ChainRing& ring, const RVector& v, int ring_sign) {
  const std::size_t n = v.size();
  RVector out(n);
  if (n == 0) return out;
  out[0] = ring_sign > 0 ? v[n - 1] : ring.neg(v[n - 1]);
  for (std::size_t i = 1; i < n; ++i) out[i] = v[i - 1];
  return out;
}

namespace {

// (a | b) for a + u b.
FqVector split(const FieldSpec& field, const RVector& v) {
  const std::size_t n = v.size();
  FqVector out(field, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, v[i].a);
    out.set(n + i, v[i].b);
  }
  return out;
}

// u (a + u b) = u a, i.e. (0 | a).
FqVector split_times_u(const FieldSpec& field, const RVector& v) {
  const std::size_t n = v.size();
  FqVector out(field, 2 * n);
  for (std::size_t i = 0; i < n; ++i) out.set(n + i, v[i].a);
  return out;
}

struct Planes {
  FqVector a;
  FqVector b;
};

Planes planes_of(const FieldSpec& field, const RVector& v) {
  Planes out{FqVector(field, v.size()), FqVector(field, v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.a.set(i, v[i].a);
    out.b.set(i, v[i].b);
  }
  return out;
}

}  // namespace

std::vector<FqVector> spanning_rows(const ChainRing& ring, const RIdealGens& gens) {
  validate(ring, gens);
  const std::size_t n = gens.length();
  std::vector<FqVector> rows;
  rows.reserve(2 * n * gens.generators.size());
  for (const auto& g : gens.generators) {
    RVector current = g;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(split(ring.field(), current));
      rows.push_back(split_times_u(ring.field(), current));
      current = shift(ring, current, gens.ring_sign);
    }
  }
  return rows;
}

std::size_t span_dimension(const ChainRing& ring, const RIdealGens& gens) {
  auto rows = spanning_rows(ring, gens);
  return row_reduce(ring.field(), rows, false);
}

bool is_self_orthogonal(const ChainRing& ring, const RIdealGens& gens) {
  validate(ring, gens);
  const FieldSpec& field = ring.field();
  const std::size_t n = gens.length();
  std::vector<Planes> fixed;
  for (const auto& g : gens.generators) fixed.push_back(planes_of(field, g));
  for (const auto& g : gens.generators) {
    RVector current = g;
    for (std::size_t i = 0; i < n; ++i) {
      const Planes moving = planes_of(field, current);
      for (const auto& other : fixed) {
        // [a + ub, c + ud] = a.c + u (a.d + b.c)
        if (!field.is_zero(dot(field, moving.a, other.a))) return false;
        const FqElem u_part = field.add(dot(field, moving.a, other.b), dot(field, moving.b, other.a));
        if (!field.is_zero(u_part)) return false;
      }
      current = shift(ring, current, gens.ring_sign);
    }
  }
  return true;
}

bool is_self_dual(const ChainRing& ring, const RIdealGens& gens) {
  return is_self_orthogonal(ring, gens) && span_dimension(ring, gens) == gens.length();
}

CanonicalForm canonical_form(const ChainRing& ring, const RIdealGens& gens) {
  CanonicalForm form;
  form.rows = spanning_rows(ring, gens);
  form.columns = 2 * gens.length();
  row_reduce(ring.field(), form.rows, true);
  return form;
}

RIdealGens generators_of(const ChainRing& ring, const CanonicalForm& form, int ring_sign) {
  const std::size_t n = form.columns / 2;
  RIdealGens gens;
  gens.ring_sign = ring_sign;
  for (const auto& row : form.rows) {
    RVector g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = ring.make(row.get(i), row.get(n + i));
    gens.generators.push_back(std::move(g));
  }
  if (gens.generators.empty()) gens.generators.push_back(RVector(n, ring.zero()));
  return gens;
}

}  // namespace sdcodes
