#include "cubhom/smith.hpp"

#include <optional>
#include <utility>

#include "cubhom/errors.hpp"

namespace cubhom {

namespace {

// Elimination state. Row operations on W are mirrored on T and column
// operations on S so that  original = T * W * S  holds throughout.
struct Elim {
  IntMatrix W;
  IntMatrix T;
  IntMatrix S;
  bool track;

  explicit Elim(const IntMatrix& A, bool with_transforms) : W(A), track(with_transforms) {
    if (track) {
      T = IntMatrix::identity(A.rows());
      S = IntMatrix::identity(A.cols());
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    W.swap_rows(i, j);
    if (track) T.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    W.negate_row(i);
    if (track) T.negate_col(i);
  }
  void row_add(std::size_t i, std::size_t j, const Int& k) {  // row i += k * row j
    W.add_row_multiple(i, j, k);
    if (track) T.add_col_multiple(j, i, -k);
  }
  void col_swap(std::size_t i, std::size_t j) {
    W.swap_cols(i, j);
    if (track) S.swap_rows(i, j);
  }
  void col_negate(std::size_t j) {
    W.negate_col(j);
    if (track) S.negate_row(j);
  }
  void col_add(std::size_t j, std::size_t i, const Int& k) {  // col j += k * col i
    W.add_col_multiple(j, i, k);
    if (track) S.add_row_multiple(i, j, -k);
  }
};

// Nonzero entry of least absolute value in the trailing submatrix W[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& W,
                                                                 std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t r = t; r < W.rows(); ++r)
    for (std::size_t c = t; c < W.cols(); ++c) {
      const Int& v = W.at(r, c);
      if (v == 0) continue;
      Int a = abs_int(v);
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

void diagonalize(Elim& e) {
  const std::size_t m = e.W.rows(), n = e.W.cols();
  const std::size_t mn = m < n ? m : n;
  std::size_t t = 0;
  while (t < mn) {
    auto piv = min_abs_pivot(e.W, t);
    if (!piv) break;
    e.row_swap(t, piv->first);
    e.col_swap(t, piv->second);
    if (e.W.at(t, t) < 0) e.row_negate(t);

    // Reduce column and row by the pivot; any nonzero remainder becomes a
    // strictly smaller pivot on the next pass.
    bool clean = true;
    for (std::size_t r = t + 1; r < m; ++r) {
      const Int& v = e.W.at(r, t);
      if (v == 0) continue;
      Int q = v / e.W.at(t, t);
      if (q != 0) e.row_add(r, t, -q);
      if (e.W.at(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < n; ++c) {
      const Int& v = e.W.at(t, c);
      if (v == 0) continue;
      Int q = v / e.W.at(t, t);
      if (q != 0) e.col_add(c, t, -q);
      if (e.W.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;

    // Enforce the divisibility chain: fold a non-divisible entry into row t
    // and re-run, which drives the pivot down to the gcd.
    const Int& d = e.W.at(t, t);
    bool folded = false;
    for (std::size_t r = t + 1; r < m && !folded; ++r)
      for (std::size_t c = t + 1; c < n && !folded; ++c)
        if (e.W.at(r, c) % d != 0) {
          e.row_add(t, r, 1);
          folded = true;
        }
    if (folded) continue;
    ++t;
  }
}

std::vector<Int> diagonal_factors(const IntMatrix& D) {
  std::vector<Int> out;
  const std::size_t mn = D.rows() < D.cols() ? D.rows() : D.cols();
  for (std::size_t i = 0; i < mn; ++i)
    if (D.at(i, i) != 0) out.push_back(D.at(i, i));
  return out;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  Elim e(A, /*with_transforms=*/true);
  diagonalize(e);
  SmithDecomposition out;
  out.invariant_factors = diagonal_factors(e.W);
  out.D = std::move(e.W);
  out.T = std::move(e.T);
  out.S = std::move(e.S);
  return out;
}

std::vector<Int> invariant_factors(const IntMatrix& A) {
  Elim e(A, /*with_transforms=*/false);
  diagonalize(e);
  return diagonal_factors(e.W);
}

std::size_t matrix_rank(const IntMatrix& A) { return invariant_factors(A).size(); }

Int determinant(const IntMatrix& A) {
  if (!A.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix W = A;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (W.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && W.at(r, k) == 0) ++r;
      if (r == n) return 0;
      W.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        W.at(i, j) = (W.at(i, j) * W.at(k, k) - W.at(i, k) * W.at(k, j)) / prev;
    prev = W.at(k, k);
  }
  return sign > 0 ? W.at(n - 1, n - 1) : Int(-W.at(n - 1, n - 1));
}

}  // namespace cubhom
