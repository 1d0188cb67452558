#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "sdcodes/omega.hpp"
#include "sdcodes/omega_oracle.hpp"
#include "support.hpp"

using namespace sdcodes;

namespace {

XPoly xpoly(const FieldSpec& f, std::vector<long long> ints) {
  XPoly b(f, ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) b.coeffs[i] = f.from_int(ints[i]);
  return b;
}

std::vector<Residue> signed_row(Residue p, std::vector<long long> v) {
  std::vector<Residue> out;
  for (auto x : v) out.push_back(static_cast<Residue>(((x % p) + p) % p));
  return out;
}

// sum_i c_i (x-1)^i expanded with Pascal's rule, as an independent check on
// basis_convert.
std::vector<FqElem> expand_xm1(const FieldSpec& f, const std::vector<FqElem>& c) {
  std::vector<FqElem> out(c.size(), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto term = testing::x_minus_1_pow(f, i);
    for (std::size_t k = 0; k < term.size(); ++k) out[k] = f.add(out[k], f.mul(c[i], term[k]));
  }
  return out;
}

}  // namespace

TEST_CASE("reciprocal transform examples") {
  const FieldSpec f3 = find_irreducible(3, 1);
  CHECK(reciprocal_transform(xpoly(f3, {1, 0, 0})) == xpoly(f3, {1, 2, 1}));
  CHECK(reciprocal_transform(XPoly(f3, 5)).is_zero());
  CHECK(oracle::reciprocal_oracle(xpoly(f3, {1})) == xpoly(f3, {1}));
  CHECK(oracle::reciprocal_oracle(xpoly(f3, {1, 0, 0})) == xpoly(f3, {1, 2, 1}));

  const MatrixFp g8 = g_truncated(3, 8);
  const MatrixFp plus = g8 + MatrixFp::identity(3, 8);
  XPoly ups(f3, 8);
  for (std::size_t i = 0; i < 8; ++i) ups.coeffs[i] = f3.from_int(plus(i, 4));
  CHECK(reciprocal_transform(ups) == ups);
  CHECK(oracle::reciprocal_oracle(ups) == ups);
}

TEST_CASE("reciprocal transform is an involution") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair<Residue, unsigned>{3, 1}, {3, 2}, {5, 1}, {7, 2}}) {
    const FieldSpec f = find_irreducible(p, m);
    for (std::size_t l = 1; l <= 30; l += 3) {
      XPoly b(f, l);
      for (auto& c : b.coeffs) c = testing::random_element(f, rng);
      CHECK(reciprocal_transform(reciprocal_transform(b)) == b);
      CHECK(oracle::reciprocal_oracle(oracle::reciprocal_oracle(b)) == b);
    }
  }
}

TEST_CASE("basis_convert") {
  const FieldSpec f3 = find_irreducible(3, 1);
  const std::vector<FqElem> xm1{f3.zero(), f3.one()};
  CHECK(basis_convert(f3, xm1, BasisDirection::to_standard) == std::vector<FqElem>{f3.from_int(2), f3.one()});
  const std::vector<FqElem> one{f3.one()};
  CHECK(basis_convert(f3, one, BasisDirection::to_xm1) == one);
  CHECK(basis_convert(f3, std::vector<FqElem>{}, BasisDirection::to_xm1).empty());

  std::mt19937_64 rng(11);
  const FieldSpec f9 = find_irreducible(3, 2);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<FqElem> v(20);
    for (auto& c : v) c = testing::random_element(f9, rng);
    const auto std_form = basis_convert(f9, v, BasisDirection::to_standard);
    CHECK(std_form == expand_xm1(f9, v));
    CHECK(basis_convert(f9, std_form, BasisDirection::to_xm1) == v);
  }
}

TEST_CASE("s_basis examples") {
  const FieldSpec f3 = find_irreducible(3, 1);
  const SBasis b3 = s_basis(f3, 3, 0);
  CHECK(b3.dimension() == 2);
  CHECK(basis_rank(b3) == 2);

  const SBasis b8 = s_basis(f3, 8, 4);
  REQUIRE(b8.dimension() == 2);
  CHECK(b8.vectors[0].values == std::vector<Residue>{2, 1, 0, 1});
  CHECK(b8.vectors[1].values == std::vector<Residue>{0, 0, 2, 2});
  CHECK(b8.first_j() == 3);

  CHECK(s_basis(f3, 2, 1).dimension() == 0);
  CHECK_THROWS_AS(s_basis(f3, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(combine(b8, std::vector<FqElem>{f3.one()}), std::invalid_argument);
}

TEST_CASE("Upsilon displays for length 27") {
  const FieldSpec f3 = find_irreducible(3, 1);
  struct Golden {
    std::size_t l, delta;
    std::vector<std::vector<long long>> rows;
  };
  // Rows as printed, each left-padded to the full l - delta width.
  const std::vector<Golden> goldens = {
      {6, 3, {{0, 2, 1}}},
      {10, 5, {{0, 2, -1, 1, 0}, {0, 0, 0, 2, 0}}},
      {14, 7, {{0, 2, 0, 0, 0, 0, 0}, {0, 0, 0, 2, 1, 0, -1}, {0, 0, 0, 0, 0, 2, -1}}},
      {18, 9,
       {{0, 2, 1, 0, -1, -1, 0, 1, 1},
        {0, 0, 0, 2, -1, 1, 1, -1, 1},
        {0, 0, 0, 0, 0, 2, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 2, 1}}},
      {22, 11,
       {{0, 2, -1, 1, 1, -1, 1, 0, 0, 0, 1},
        {0, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 2, -1, 1, -1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0}}},
      {26, 13,
       {{0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 2, -1, 1, -1, 1, -1, 1, -1},
        {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -1}}},
  };
  for (const auto& g : goldens) {
    CAPTURE(g.l);
    const SBasis basis = s_basis(f3, g.l, g.delta);
    REQUIRE(basis.dimension() == g.rows.size());
    for (std::size_t i = 0; i < g.rows.size(); ++i) CHECK(basis.vectors[i].values == signed_row(3, g.rows[i]));
  }
}

TEST_CASE("every column of G_l + I_l is a fixed point") {
  for (Residue p : {3u, 5u}) {
    const FieldSpec f = find_irreducible(p, 1);
    for (std::size_t l = 1; l <= 30; ++l) {
      const MatrixFp plus = g_truncated(p, l) + MatrixFp::identity(p, l);
      for (std::size_t c = 0; c < l; ++c) {
        XPoly b(f, l);
        for (std::size_t i = 0; i < l; ++i) b.coeffs[i] = f.from_int(plus(i, c));
        CHECK(s_membership(b, 0));
      }
    }
  }
}

TEST_CASE("s_membership") {
  const FieldSpec f3 = find_irreducible(3, 1);
  CHECK(s_membership(XPoly(f3, 4), 2));
  CHECK_FALSE(s_membership(xpoly(f3, {0, 1, 0}), 0));
  const SBasis b = s_basis(f3, 8, 4);
  for (const auto& a4 : fq_enumerate(f3)) {
    for (const auto& a6 : fq_enumerate(f3)) {
      const std::vector<FqElem> params{a4, a6};
      CHECK(s_membership(embed(b, params), 4));
    }
  }
  // Fixed, but with a nonzero leading coefficient.
  CHECK_FALSE(s_membership(embed(s_basis(f3, 8, 0), std::vector<FqElem>{f3.one(), f3.zero(), f3.zero(), f3.zero()}), 1));
}

TEST_CASE("kernel oracle examples") {
  const FieldSpec f3 = find_irreducible(3, 1);
  CHECK(oracle::kernel_oracle(f3, 3).size() == 9);
  CHECK(oracle::kernel_oracle(f3, 1).size() == 3);
  CHECK(oracle::kernel_oracle(find_irreducible(5, 1), 4).size() == 25);
  CHECK_THROWS_AS(oracle::kernel_oracle(f3, 20), std::length_error);
}
