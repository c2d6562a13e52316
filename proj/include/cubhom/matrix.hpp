#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "cubhom/integer.hpp"

namespace cubhom {

// Dense integer matrix, row-major. Empty shapes (0 x n, m x 0) are legal and
// stand for maps to or from the zero group.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row i += k * row j   /   col j += k * col i
  void add_row_multiple(std::size_t i, std::size_t j, const Int& k);
  void add_col_multiple(std::size_t j, std::size_t i, const Int& k);

  // Writes k * src into the block with upper-left corner (row0, col0).
  void add_block(std::size_t row0, std::size_t col0, const IntMatrix& src, const Int& k);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace cubhom
