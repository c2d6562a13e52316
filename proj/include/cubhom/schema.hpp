#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubhom/chain.hpp"

namespace cubhom {

// Downward-closed family of nonempty vertex subsets (an abstract simplicial
// complex). Faces are kept as ascending index tuples in lexicographic order.
class SimplicialSchema {
 public:
  SimplicialSchema(std::vector<std::string> vertices,
                   std::vector<std::vector<std::size_t>> faces);

  // Closure of the given faces under taking nonempty subsets.
  static SimplicialSchema from_maximal(std::vector<std::string> vertices,
                                       std::vector<std::vector<std::size_t>> maximal);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::size_t>> faces_;
};

// C_n free on the ascending (n+1)-tuples, d_n = alternating sum of vertex
// deletions.
ChainComplex schema_complex(const SimplicialSchema& K);

// Finite partially ordered set; the relation is stored as explicit pairs and
// checked for reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  FinitePoset(std::vector<std::string> elements, std::set<std::pair<std::size_t, std::size_t>> leq);

  // Reflexive-transitive closure of a cover relation; antisymmetry checked.
  static FinitePoset from_covers(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const { return elements_.size(); }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.count({a, b}) != 0; }

 private:
  std::vector<std::string> elements_;
  std::set<std::pair<std::size_t, std::size_t>> leq_;
};

// Faces are the chains p0 < ... < pn; homology equals poset homology with
// constant Z coefficients.
SimplicialSchema order_complex(const FinitePoset& P);
std::vector<FGAbelianGroup> poset_homology(const FinitePoset& P);

// True iff the poset has the integral homology of a point.
bool is_acyclic(const FinitePoset& P);

}  // namespace cubhom
