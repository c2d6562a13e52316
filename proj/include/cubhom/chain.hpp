#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubhom/abelian.hpp"
#include "cubhom/matrix.hpp"

namespace cubhom {

// Bounded chain complex of finitely generated free abelian groups
//   0 <- C_0 <-d1- C_1 <- ... <-d_top- C_top <- 0.
// Construction verifies shape compatibility and d_{n} * d_{n+1} = 0.
class ChainComplex {
 public:
  ChainComplex() : labels_(1) {}
  ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<IntMatrix> boundaries);

  std::size_t top_degree() const { return labels_.size() - 1; }
  std::size_t rank(std::size_t n) const { return n < labels_.size() ? labels_[n].size() : 0; }
  const std::vector<std::string>& labels(std::size_t n) const { return labels_[n]; }

  // d_n : C_n -> C_{n-1}; degrees outside [1, top] yield zero maps of the
  // right shape.
  IntMatrix boundary(std::size_t n) const;

 private:
  std::vector<std::vector<std::string>> labels_;  // one list of basis labels per degree
  std::vector<IntMatrix> boundaries_;             // boundaries_[i] = d_{i+1}
};

// Ker(beta) / Im(alpha) for Z^n -alpha-> Z^m -beta-> Z^p with beta*alpha = 0,
// via the invariant factors of alpha and the rank of beta.
FGAbelianGroup homology_of_pair(const IntMatrix& alpha, const IntMatrix& beta);

// Homology groups H_0 .. H_max_degree of the complex; one Smith reduction per
// boundary, reused by the two adjacent degrees.
std::vector<FGAbelianGroup> homology_of_complex(const ChainComplex& C, std::size_t max_degree);
std::vector<FGAbelianGroup> homology_of_complex(const ChainComplex& C);

}  // namespace cubhom
