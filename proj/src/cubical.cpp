#include "cubhom/cubical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

std::size_t ElementaryCube::dim() const {
  std::size_t d = 0;
  for (const auto& [l, r] : intervals)
    if (r != l) ++d;
  return d;
}

std::string ElementaryCube::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (k) os << "x";
    os << "[" << intervals[k].first << "," << intervals[k].second << "]";
  }
  return os.str();
}

ElementaryCube cube_face(const ElementaryCube& Q, std::size_t j, int eps) {
  if (j < 1 || j > Q.dim())
    throw IndexOutOfRange("face index " + std::to_string(j) + " out of range for cube " +
                          Q.to_string() + " of dimension " + std::to_string(Q.dim()));
  ElementaryCube out = Q;
  std::size_t seen = 0;
  for (auto& [l, r] : out.intervals) {
    if (l == r) continue;
    if (++seen == j) {
      if (eps == 0)
        r = l;
      else
        l = r;
      return out;
    }
  }
  throw IndexOutOfRange("unreachable");
}

EuclideanCubicalSet::EuclideanCubicalSet(std::size_t ambient_dim,
                                         std::vector<ElementaryCube> cubes)
    : ambient_dim_(ambient_dim), cubes_(std::move(cubes)) {
  std::sort(cubes_.begin(), cubes_.end());
  cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
  for (const ElementaryCube& q : cubes_) {
    if (q.emb() != ambient_dim_)
      throw BadInterval("cube " + q.to_string() + " does not live in dimension " +
                        std::to_string(ambient_dim_));
    for (const auto& [l, r] : q.intervals)
      if (r != l && r != l + 1)
        throw BadInterval("interval [" + std::to_string(l) + "," + std::to_string(r) +
                          "] is not elementary");
    for (std::size_t j = 1; j <= q.dim(); ++j)
      for (int eps : {0, 1})
        if (!std::binary_search(cubes_.begin(), cubes_.end(), cube_face(q, j, eps)))
          throw DanglingFace("cube set is not closed under faces at " + q.to_string());
  }
}

EuclideanCubicalSet from_generators(
    std::size_t ambient_dim,
    const std::vector<std::vector<std::pair<long long, long long>>>& boxes) {
  std::set<ElementaryCube> all;
  for (const auto& box : boxes) {
    if (box.size() != ambient_dim)
      throw BadInterval("box has " + std::to_string(box.size()) + " axes, expected " +
                        std::to_string(ambient_dim));
    for (const auto& [a, b] : box)
      if (b < a)
        throw BadInterval("box interval [" + std::to_string(a) + "," + std::to_string(b) +
                          "] has negative length");
    // Elementary intervals along each axis, then their Cartesian product.
    std::vector<std::vector<std::pair<long long, long long>>> choices(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) {
      for (long long l = box[k].first; l <= box[k].second; ++l) choices[k].push_back({l, l});
      for (long long l = box[k].first; l < box[k].second; ++l) choices[k].push_back({l, l + 1});
    }
    std::vector<std::size_t> pick(ambient_dim, 0);
    for (;;) {
      ElementaryCube q;
      q.intervals.reserve(ambient_dim);
      for (std::size_t k = 0; k < ambient_dim; ++k) q.intervals.push_back(choices[k][pick[k]]);
      all.insert(std::move(q));
      std::size_t k = 0;
      while (k < ambient_dim && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == ambient_dim) break;
    }
  }
  return EuclideanCubicalSet(ambient_dim,
                             std::vector<ElementaryCube>(all.begin(), all.end()));
}

std::size_t EuclideanCubicalSet::count_of_dim(std::size_t m) const {
  std::size_t n = 0;
  for (const ElementaryCube& q : cubes_)
    if (q.dim() == m) ++n;
  return n;
}

PrecubicalSet to_precubical(const EuclideanCubicalSet& X) {
  std::map<ElementaryCube, std::pair<std::size_t, std::size_t>> where;  // cube -> (deg, idx)
  PrecubicalSet out;
  for (const ElementaryCube& q : X.cubes())
    where[q] = {q.dim(), out.add_cell(q.dim(), q.to_string())};
  for (const ElementaryCube& q : X.cubes()) {
    auto [deg, idx] = where[q];
    for (std::size_t j = 1; j <= deg; ++j)
      for (int eps : {0, 1}) out.set_face(deg, idx, j, eps, where[cube_face(q, j, eps)].second);
  }
  out.validate();
  return out;
}

}  // namespace cubhom
