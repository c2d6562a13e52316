#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubhom/chain.hpp"
#include "cubhom/matrix.hpp"

namespace cubhom {

// Graded cell sets with face maps d_i^{n,eps} : X_n -> X_{n-1}, 1 <= i <= n,
// eps in {0,1}, subject to the precubical identities (no degeneracies).
// Cells are opaque string identifiers; degree is structural.
class PrecubicalSet {
 public:
  static constexpr std::size_t kNoFace = static_cast<std::size_t>(-1);

  // Returns the index of the new cell within its degree.
  std::size_t add_cell(std::size_t degree, std::string name);
  void set_face(std::size_t degree, std::size_t index, std::size_t i, int eps,
                std::size_t target);

  std::size_t top_degree() const { return cells_.empty() ? 0 : cells_.size() - 1; }
  std::size_t size(std::size_t degree) const {
    return degree < cells_.size() ? cells_[degree].size() : 0;
  }
  const std::string& cell_name(std::size_t degree, std::size_t index) const {
    return cells_[degree][index];
  }
  std::optional<std::size_t> find_cell(std::size_t degree, const std::string& name) const;

  // Face lookup; DanglingFace when the map was never assigned.
  std::size_t face(std::size_t degree, std::size_t index, std::size_t i, int eps) const;

  // Checks totality of the face maps and every precubical identity; reports
  // the first violation with witnesses (n, i, j, alpha, beta, cell).
  void validate() const;

 private:
  std::vector<std::vector<std::string>> cells_;
  // faces_[n][index][i-1][eps], present for n >= 1
  std::vector<std::vector<std::vector<std::array<std::size_t, 2>>>> faces_;
};

// Free-abelian homological system on X: a group Z^rank(cell) per cell and a
// matrix per elementary face morphism, contravariantly.
class HomologicalSystem {
 public:
  HomologicalSystem() = default;
  explicit HomologicalSystem(const PrecubicalSet& X);

  static HomologicalSystem constant_z(const PrecubicalSet& X);

  void set_rank(std::size_t degree, std::size_t index, std::size_t rank);
  void set_face_matrix(std::size_t degree, std::size_t index, std::size_t i, int eps,
                       IntMatrix m);

  std::size_t rank(std::size_t degree, std::size_t index) const {
    return ranks_[degree][index];
  }
  const IntMatrix& face_matrix(std::size_t degree, std::size_t index, std::size_t i,
                               int eps) const {
    return maps_[degree][index][i - 1][eps];
  }

  // Shape agreement (RankMismatch) and square functoriality
  // (FunctorialityViolated) over a valid X.
  void validate(const PrecubicalSet& X) const;

 private:
  std::vector<std::vector<std::size_t>> ranks_;
  std::vector<std::vector<std::vector<std::array<IntMatrix, 2>>>> maps_;
};

// C_n = free on X_n, d_n = sum_i (-1)^i (L(d_i^{n,1}) - L(d_i^{n,0})).
ChainComplex integral_complex(const PrecubicalSet& X);

// C_n(X,F) = direct sum over cells of F(cell), blocks routed through the face
// matrices; basis order is cells in declared order, then each local basis.
ChainComplex coefficient_complex(const PrecubicalSet& X, const HomologicalSystem& F);

// The two rank-1 systems of Goubault type: Z^0 has face matrix [1] for eps=0
// and [0] for eps=1; Z^1 the reverse.
std::pair<HomologicalSystem, HomologicalSystem> goubault_systems(const PrecubicalSet& X);

}  // namespace cubhom
