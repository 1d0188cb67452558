#pragma once

// Dense row-major matrices over F_p.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sdcodes/fieldcore.hpp"

namespace sdcodes {

class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(Residue p, std::size_t rows, std::size_t cols);
  // Entries are reduced into [0, p); negative values are accepted.
  MatrixFp(Residue p, std::size_t rows, std::size_t cols, const std::vector<long long>& entries);

  static MatrixFp identity(Residue p, std::size_t n);

  Residue p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<Residue> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Residue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Residue> column(std::size_t j) const;

  bool is_lower_triangular() const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  Residue p_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

MatrixFp operator+(const MatrixFp& a, const MatrixFp& b);
MatrixFp operator-(const MatrixFp& a, const MatrixFp& b);
MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);

// Rank over F_p by Gaussian elimination.
std::size_t rank_fp(MatrixFp m);

// Rows of integers; `signed_residues` prints p - 1 as -1 and so on.
std::string format_grid(const MatrixFp& m, bool signed_residues = false);

}  // namespace sdcodes
