#pragma once

// Dense vectors over F_{p^m} in planar layout: plane t holds coefficient t of
// every entry, so data()[t * size() + i] is w^t-coefficient of entry i.
// Every F_{p^m}-linear operation then decomposes into F_p kernel calls over
// whole contiguous buffers.

#include <span>
#include <vector>

#include "sdcodes/fieldcore.hpp"

namespace sdcodes {

class FqVector {
 public:
  FqVector() = default;
  FqVector(const FieldSpec& field, std::size_t n) : n_(n), m_(field.m()), data_(n * field.m(), 0) {}

  std::size_t size() const { return n_; }
  unsigned degree() const { return m_; }

  FqElem get(std::size_t i) const;
  void set(std::size_t i, const FqElem& value);
  bool is_zero_at(std::size_t i) const;
  bool is_zero() const;

  std::span<Residue> plane(unsigned t) { return {data_.data() + t * n_, n_}; }
  std::span<const Residue> plane(unsigned t) const { return {data_.data() + t * n_, n_}; }
  std::span<Residue> data() { return data_; }
  std::span<const Residue> data() const { return data_; }

  friend bool operator==(const FqVector&, const FqVector&) = default;
  friend auto operator<=>(const FqVector&, const FqVector&) = default;

 private:
  std::size_t n_ = 0;
  unsigned m_ = 0;
  std::vector<Residue> data_;
};

// v <- w * v, entrywise.
void mul_by_generator(const FieldSpec& field, FqVector& v);

// v <- c * v, entrywise.
void scale(const FieldSpec& field, FqVector& v, const FqElem& c);

// The m vectors v, w v, ..., w^{m-1} v. Multiplying by any c in F_{p^m} is
// then a sum of m F_p-scaled copies, which is what elimination uses.
std::vector<FqVector> generator_multiples(const FieldSpec& field, const FqVector& v);

// dst <- dst + c * v, with multiples = generator_multiples(field, v).
void axpy(const FieldSpec& field, FqVector& dst, const FqElem& c, std::span<const FqVector> multiples);

// dst <- dst + c * src.
void axpy(const FieldSpec& field, FqVector& dst, const FqElem& c, const FqVector& src);

// sum_i a_i b_i in F_{p^m}.
FqElem dot(const FieldSpec& field, const FqVector& a, const FqVector& b);

// Gaussian elimination over F_{p^m}, scanning columns left to right. On
// return the first `rank` rows are in echelon form with unit pivots; when
// `reduced` is set they are in reduced row-echelon form, which is unique for
// the row space. Remaining rows are zero and removed.
std::size_t row_reduce(const FieldSpec& field, std::vector<FqVector>& rows, bool reduced);

}  // namespace sdcodes
