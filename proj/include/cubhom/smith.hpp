#pragma once

#include <vector>

#include "cubhom/matrix.hpp"

namespace cubhom {

// A = T * D * S with unimodular T, S and diagonal D whose positive entries
// d1 | d2 | ... | dk are the invariant factors (unit factors included).
struct SmithDecomposition {
  IntMatrix D;
  IntMatrix T;  // rows x rows
  IntMatrix S;  // cols x cols
  std::vector<Int> invariant_factors;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Diagonal-only variant; skips the transform bookkeeping.
std::vector<Int> invariant_factors(const IntMatrix& A);

// Rank over Z (= rank over Q), the number of nonzero invariant factors.
std::size_t matrix_rank(const IntMatrix& A);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& A);

}  // namespace cubhom
