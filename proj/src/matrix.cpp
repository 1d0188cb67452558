#include "sdcodes/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sdcodes/simd.hpp"

namespace sdcodes {

namespace {

void require_same_shape(const MatrixFp& a, const MatrixFp& b, const char* op) {
  if (a.p() != b.p()) throw std::invalid_argument(std::string(op) + ": mismatched characteristic");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": mismatched dimensions");
  }
}

}  // namespace

MatrixFp::MatrixFp(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFp::MatrixFp(Residue p, std::size_t rows, std::size_t cols, const std::vector<long long>& entries)
    : MatrixFp(p, rows, cols) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
  const long long pp = p;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    data_[i] = static_cast<Residue>(((entries[i] % pp) + pp) % pp);
  }
}

MatrixFp MatrixFp::identity(Residue p, std::size_t n) {
  MatrixFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Residue> MatrixFp::column(std::size_t j) const {
  std::vector<Residue> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool MatrixFp::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

MatrixFp operator+(const MatrixFp& a, const MatrixFp& b) {
  require_same_shape(a, b, "matrix sum");
  MatrixFp r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) simd::axpy(r.row(i), b.row(i), 1, a.p());
  return r;
}

MatrixFp operator-(const MatrixFp& a, const MatrixFp& b) {
  require_same_shape(a, b, "matrix difference");
  MatrixFp r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) simd::axpy(r.row(i), b.row(i), a.p() - 1, a.p());
  return r;
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
  if (a.p() != b.p()) throw std::invalid_argument("matrix product: mismatched characteristic");
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  MatrixFp r(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = r.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      simd::axpy(out, b.row(k), a(i, k), a.p());
    }
  }
  return r;
}

std::size_t rank_fp(MatrixFp m) {
  const Residue p = m.p();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      auto a = m.row(pivot);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Residue inv = inverse_mod(m(rank, col), p);
    simd::scale(m.row(rank), inv, p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Residue f = m(r, col);
      if (f != 0) simd::axpy(m.row(r), m.row(rank), p - f, p);
    }
    ++rank;
  }
  return rank;
}

std::string format_grid(const MatrixFp& m, bool signed_residues) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      long long v = m(i, j);
      if (signed_residues && v > static_cast<long long>(m.p() / 2)) v -= m.p();
      cells[i * m.cols() + j] = std::to_string(v);
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      if (j) out << ' ';
      out << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sdcodes
