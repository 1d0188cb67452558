#include "sdcodes/fq_vector.hpp"

#include <algorithm>
#include <cassert>

namespace sdcodes {

FqElem FqVector::get(std::size_t i) const {
  FqElem r{std::vector<Residue>(m_, 0)};
  for (unsigned t = 0; t < m_; ++t) r.coeffs[t] = data_[t * n_ + i];
  return r;
}

void FqVector::set(std::size_t i, const FqElem& value) {
  assert(value.coeffs.size() == m_);
  for (unsigned t = 0; t < m_; ++t) data_[t * n_ + i] = value.coeffs[t];
}

bool FqVector::is_zero_at(std::size_t i) const {
  for (unsigned t = 0; t < m_; ++t) {
    if (data_[t * n_ + i] != 0) return false;
  }
  return true;
}

bool FqVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

void mul_by_generator(const FieldSpec& field, FqVector& v) {
  const Residue p = field.p();
  const unsigned m = field.m();
  const auto& f = field.modulus();
  if (m == 1) {
    // w is the root of x + f_0, i.e. w = -f_0.
    simd::scale(v.plane(0), (p - f[0]) % p, p);
    return;
  }
  // w * sum_t e_t w^t = sum_t e_{t-1} w^t - e_{m-1} sum_t f_t w^t
  std::vector<Residue> top(v.plane(m - 1).begin(), v.plane(m - 1).end());
  for (unsigned t = m - 1; t > 0; --t) {
    auto dst = v.plane(t);
    auto src = v.plane(t - 1);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  std::fill(v.plane(0).begin(), v.plane(0).end(), 0);
  for (unsigned t = 0; t < m; ++t) {
    simd::axpy(v.plane(t), top, (p - f[t]) % p, p);
  }
}

std::vector<FqVector> generator_multiples(const FieldSpec& field, const FqVector& v) {
  std::vector<FqVector> out;
  out.reserve(field.m());
  out.push_back(v);
  for (unsigned t = 1; t < field.m(); ++t) {
    FqVector next = out.back();
    mul_by_generator(field, next);
    out.push_back(std::move(next));
  }
  return out;
}

void axpy(const FieldSpec& field, FqVector& dst, const FqElem& c, std::span<const FqVector> multiples) {
  assert(multiples.size() == field.m());
  for (unsigned t = 0; t < field.m(); ++t) {
    if (c.coeffs[t] == 0) continue;
    simd::axpy(dst.data(), multiples[t].data(), c.coeffs[t], field.p());
  }
}

void axpy(const FieldSpec& field, FqVector& dst, const FqElem& c, const FqVector& src) {
  if (field.is_zero(c)) return;
  if (field.m() == 1) {
    simd::axpy(dst.data(), src.data(), c.coeffs[0], field.p());
    return;
  }
  const auto multiples = generator_multiples(field, src);
  axpy(field, dst, c, multiples);
}

void scale(const FieldSpec& field, FqVector& v, const FqElem& c) {
  if (field.m() == 1) {
    simd::scale(v.data(), c.coeffs[0], field.p());
    return;
  }
  FqVector out(field, v.size());
  axpy(field, out, c, v);
  v = std::move(out);
}

FqElem dot(const FieldSpec& field, const FqVector& a, const FqVector& b) {
  assert(a.size() == b.size());
  const unsigned m = field.m();
  std::vector<Residue> poly(2 * m - 1, 0);
  for (unsigned s = 0; s < m; ++s) {
    for (unsigned t = 0; t < m; ++t) {
      poly[s + t] = (poly[s + t] + simd::dot(a.plane(s), b.plane(t), field.p())) % field.p();
    }
  }
  return field.reduce(std::move(poly));
}

std::size_t row_reduce(const FieldSpec& field, std::vector<FqVector>& rows, bool reduced) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot].is_zero_at(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    scale(field, rows[rank], field.inv(rows[rank].get(col)));
    const auto multiples = generator_multiples(field, rows[rank]);
    for (std::size_t r = reduced ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r == rank || rows[r].is_zero_at(col)) continue;
      axpy(field, rows[r], field.neg(rows[r].get(col)), multiples);
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace sdcodes
