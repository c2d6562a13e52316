#pragma once

// Test-only reference implementations, kept deliberately naive and independent
// of the library's Smith reduction path.

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "cubhom/chain.hpp"
#include "cubhom/matrix.hpp"

namespace oracle {

using cubhom::Int;
using cubhom::IntMatrix;
using Rational = boost::multiprecision::cpp_rational;

// Textbook Smith reduction: first nonzero entry as pivot, Euclidean swaps
// until the pivot divides its row and column, then a divisibility sweep.
// Returns the nonzero diagonal entries (unit factors included).
inline std::vector<Int> naive_snf_factors(IntMatrix A) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    bool found = false;
    for (std::size_t r = t; r < m && !found; ++r)
      for (std::size_t c = t; c < n && !found; ++c)
        if (A.at(r, c) != 0) {
          A.swap_rows(t, r);
          A.swap_cols(t, c);
          found = true;
        }
    if (!found) break;
    for (;;) {
      bool stable = true;
      for (std::size_t r = t + 1; r < m; ++r)
        while (A.at(r, t) != 0) {
          Int q = A.at(r, t) / A.at(t, t);
          A.add_row_multiple(r, t, -q);
          if (A.at(r, t) != 0) {
            A.swap_rows(t, r);
            stable = false;
          }
        }
      for (std::size_t c = t + 1; c < n; ++c)
        while (A.at(t, c) != 0) {
          Int q = A.at(t, c) / A.at(t, t);
          A.add_col_multiple(c, t, -q);
          if (A.at(t, c) != 0) {
            A.swap_cols(t, c);
            stable = false;
          }
        }
      if (!stable) continue;
      bool fixed = false;
      for (std::size_t r = t + 1; r < m && !fixed; ++r)
        for (std::size_t c = t + 1; c < n && !fixed; ++c)
          if (A.at(r, c) % A.at(t, t) != 0) {
            A.add_row_multiple(t, r, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (A.at(t, t) < 0) A.negate_row(t);
    diag.push_back(A.at(t, t));
  }
  std::vector<Int> out;
  for (const Int& d : diag)
    if (d != 0) out.push_back(d);
  return out;
}

// Rank by plain Gaussian elimination over the rationals.
inline std::size_t rational_rank(const IntMatrix& A) {
  std::vector<std::vector<Rational>> M(A.rows(), std::vector<Rational>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = Rational(A.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < A.rows() && M[piv][col] == 0) ++piv;
    if (piv == A.rows()) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t r = 0; r < A.rows(); ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[rank][col];
      for (std::size_t c = col; c < A.cols(); ++c) M[r][c] -= f * M[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Integer row basis of the left kernel of A (rows v with v * A = 0), found by
// rational elimination on the transpose and clearing denominators.
inline IntMatrix left_kernel(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  // Solve A^T x = 0 over Q.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) M[i][j] = Rational(A.at(j, i));
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[rank]);
    Rational lead = M[rank][col];
    for (std::size_t c = 0; c < m; ++c) M[rank][c] /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (std::size_t c = 0; c < m; ++c) M[r][c] -= f * M[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  IntMatrix K(m - rank, m);
  std::size_t row = 0;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -M[r][free];
    Int lcm = 1;
    for (const Rational& q : v) {
      Int den = boost::multiprecision::denominator(q);
      lcm = lcm / cubhom::gcd_int(lcm, den) * den;
    }
    for (std::size_t c = 0; c < m; ++c) {
      Rational scaled = v[c] * Rational(lcm);
      K.at(row, c) = boost::multiprecision::numerator(scaled);
    }
    ++row;
  }
  return K;
}

// Homology the slow way: naive Smith factors for the incoming boundary and
// rational elimination for the outgoing rank.
inline std::vector<cubhom::FGAbelianGroup> naive_homology(const cubhom::ChainComplex& C) {
  std::vector<cubhom::FGAbelianGroup> out(C.top_degree() + 1);
  for (std::size_t n = 0; n <= C.top_degree(); ++n) {
    std::vector<Int> incoming = naive_snf_factors(C.boundary(n + 1));
    std::size_t outgoing = n == 0 ? 0 : rational_rank(C.boundary(n));
    out[n].free_rank = C.rank(n) - incoming.size() - outgoing;
    for (const Int& d : incoming)
      if (d > 1) out[n].torsion.push_back(d);
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long long lo,
                               long long hi) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<long long> val(lo, hi);
  IntMatrix A(dim(rng), dim(rng));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) = val(rng);
  return A;
}

}  // namespace oracle
