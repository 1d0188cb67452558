#include <doctest.h>

#include <stdexcept>

#include "sdcodes/chainring.hpp"
#include "support.hpp"

using namespace sdcodes;
using testing::Poly;

namespace {

struct Fixture {
  FieldSpec fld = find_irreducible(3, 1);
  ChainRing ring{fld};

  FqElem c(long long v) const { return fld.from_int(v); }
  RElem r(long long a, long long b) const { return ring.make(c(a), c(b)); }

  RIdealGens ideal(std::vector<std::pair<Poly, Poly>> gens, std::size_t n, int sign = 1) const {
    RIdealGens out;
    out.ring_sign = sign;
    for (const auto& [a, b] : gens) out.generators.push_back(testing::ring_poly(fld, a, b, n, sign));
    return out;
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "ring arithmetic") {
  CHECK(ring.mul(r(1, 1), r(1, -1)) == ring.one());
  CHECK(ring.mul(ring.u(), ring.u()) == ring.zero());
  CHECK(ring.mul(r(2, 1), ring.u()) == r(0, 2));
  CHECK(ring.add(r(2, 2), r(2, 1)) == r(1, 0));
  CHECK(ring.sub(r(0, 0), r(1, 1)) == ring.neg(r(1, 1)));
  CHECK(ring.is_unit(r(1, 2)));
  CHECK_FALSE(ring.is_unit(r(0, 2)));
  CHECK(ring.scale(ring.u(), RVector{r(1, 0), r(2, 2)}) == RVector{r(0, 1), r(0, 2)});
}

TEST_CASE_FIXTURE(Fixture, "inner product") {
  const RVector ones(3, ring.one());
  CHECK(ring.inner_product(ones, ones) == ring.zero());
  const RVector ue{ring.u(), ring.zero(), ring.zero()};
  CHECK(ring.inner_product(ue, ue) == ring.zero());
  const RVector e1{ring.one(), ring.zero()}, e2{ring.zero(), ring.one()};
  CHECK(ring.inner_product(e1, e2) == ring.zero());
  CHECK_THROWS_AS(ring.inner_product(e1, ones), std::invalid_argument);
}

TEST_CASE_FIXTURE(Fixture, "shift") {
  const RVector v{r(1, 0), r(2, 0), r(0, 1)};
  CHECK(shift(ring, v, 1) == RVector{r(0, 1), r(1, 0), r(2, 0)});
  CHECK(shift(ring, v, -1) == RVector{r(0, 2), r(1, 0), r(2, 0)});
}

TEST_CASE_FIXTURE(Fixture, "span dimension") {
  const Poly zero{}, one{c(1)};
  CHECK(span_dimension(ring, ideal({{zero, one}}, 3)) == 3);
  CHECK(span_dimension(ring, ideal({{one, zero}}, 3)) == 6);
  CHECK(span_dimension(ring, ideal({{testing::x_minus_1_pow(fld, 3), zero}}, 3)) == 0);
}

TEST_CASE_FIXTURE(Fixture, "self-orthogonality and self-duality") {
  const Poly zero{}, one{c(1)};
  const auto u_ideal = ideal({{zero, one}}, 3);
  const auto whole = ideal({{one, zero}}, 3);
  const auto second = ideal({{zero, testing::x_minus_1_pow(fld, 1)}, {testing::x_minus_1_pow(fld, 2), zero}}, 3);
  CHECK(is_self_orthogonal(ring, u_ideal));
  CHECK(is_self_orthogonal(ring, ideal({{zero, one}}, 9)));
  CHECK_FALSE(is_self_orthogonal(ring, whole));
  CHECK(is_self_orthogonal(ring, second));
  CHECK(is_self_dual(ring, u_ideal));
  CHECK(is_self_dual(ring, second));
  CHECK_FALSE(is_self_dual(ring, whole));
  // <u (x-1)> is self-orthogonal but too small.
  CHECK_FALSE(is_self_dual(ring, ideal({{zero, testing::x_minus_1_pow(fld, 1)}}, 3)));
}

TEST_CASE_FIXTURE(Fixture, "canonical forms") {
  const Poly zero{}, one{c(1)}, two{c(2)};
  const auto u1 = ideal({{zero, one}}, 3);
  const auto u2 = ideal({{zero, two}}, 3);
  const auto second = ideal({{zero, testing::x_minus_1_pow(fld, 1)}, {testing::x_minus_1_pow(fld, 2), zero}}, 3);
  const auto form = canonical_form(ring, u1);
  CHECK(form == canonical_form(ring, u2));
  CHECK(form != canonical_form(ring, second));
  CHECK(canonical_form(ring, generators_of(ring, form, 1)) == form);
  const auto form2 = canonical_form(ring, second);
  CHECK(canonical_form(ring, generators_of(ring, form2, 1)) == form2);
  CHECK(form.rows.size() == 3);
}

TEST_CASE_FIXTURE(Fixture, "extension-field rows") {
  const FieldSpec f9 = find_irreducible(3, 2);
  const ChainRing r9(f9);
  RIdealGens g;
  const FqElem w = f9.element({0, 1});
  // <w u> = <u>
  g.generators.push_back(RVector{RElem{f9.zero(), w}, RElem{f9.zero(), f9.zero()}, RElem{f9.zero(), f9.zero()}});
  RIdealGens h;
  h.generators.push_back(RVector{RElem{f9.zero(), f9.one()}, RElem{f9.zero(), f9.zero()}, RElem{f9.zero(), f9.zero()}});
  CHECK(canonical_form(r9, g) == canonical_form(r9, h));
  CHECK(is_self_dual(r9, g));
}

TEST_CASE_FIXTURE(Fixture, "validation") {
  RIdealGens empty;
  CHECK_THROWS_AS(validate(ring, empty), std::invalid_argument);
  RIdealGens uneven;
  uneven.generators = {RVector(3, ring.one()), RVector(2, ring.one())};
  CHECK_THROWS_AS(validate(ring, uneven), std::invalid_argument);
  RIdealGens sign;
  sign.ring_sign = 2;
  sign.generators = {RVector(3, ring.one())};
  CHECK_THROWS_AS(validate(ring, sign), std::invalid_argument);
  RIdealGens bad;
  bad.generators = {RVector{RElem{FqElem{{5}}, c(0)}}};
  CHECK_THROWS_AS(validate(ring, bad), std::invalid_argument);
}
