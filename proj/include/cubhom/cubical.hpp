#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cubhom/precubical.hpp"

namespace cubhom {

// Product of elementary intervals [l,l] or [l,l+1] in Z^n.
struct ElementaryCube {
  std::vector<std::pair<long long, long long>> intervals;

  std::size_t emb() const { return intervals.size(); }
  std::size_t dim() const;

  bool operator==(const ElementaryCube&) const = default;
  bool operator<(const ElementaryCube& rhs) const { return intervals < rhs.intervals; }

  std::string to_string() const;  // "[0,1]x[2,2]"
};

// Replaces the j-th nondegenerate interval [a,b] by {a} (eps=0) or {b} (eps=1);
// 1 <= j <= dim Q.
ElementaryCube cube_face(const ElementaryCube& Q, std::size_t j, int eps);

// Face-closed set of elementary cubes with a fixed ambient dimension, kept in
// lexicographic order by interval endpoints.
class EuclideanCubicalSet {
 public:
  EuclideanCubicalSet(std::size_t ambient_dim, std::vector<ElementaryCube> cubes);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<ElementaryCube>& cubes() const { return cubes_; }
  std::size_t count_of_dim(std::size_t m) const;

 private:
  std::size_t ambient_dim_;
  std::vector<ElementaryCube> cubes_;
};

// All elementary cubes contained in the union of the integer boxes; each box
// is one closed interval [a,b] (b >= a) per axis.
EuclideanCubicalSet from_generators(
    std::size_t ambient_dim,
    const std::vector<std::vector<std::pair<long long, long long>>>& boxes);

// The precubical set K(X): degree-m cells are the cubes of dimension m, face
// maps given by cube_face.
PrecubicalSet to_precubical(const EuclideanCubicalSet& X);

}  // namespace cubhom
