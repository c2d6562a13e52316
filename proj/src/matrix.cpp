#include "cubhom/matrix.hpp"

#include <ostream>
#include <string>

#include "cubhom/errors.hpp"

namespace cubhom {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row in matrix literal");
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : entries_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(rhs.rows_) + "x" +
                            std::to_string(rhs.cols_));
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Int& w = rhs.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (Int& v : out.entries_) v = -v;
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& k) {
  for (std::size_t c = 0; c < cols_; ++c) {
    const Int& src = at(j, c);
    if (src != 0) at(i, c) += k * src;
  }
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t i, const Int& k) {
  for (std::size_t r = 0; r < rows_; ++r) {
    const Int& src = at(r, i);
    if (src != 0) at(r, j) += k * src;
  }
}

void IntMatrix::add_block(std::size_t row0, std::size_t col0, const IntMatrix& src, const Int& k) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) {
      const Int& v = src.at(i, j);
      if (v != 0) at(row0 + i, col0 + j) += k * v;
    }
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace cubhom
