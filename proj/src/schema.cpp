#include "cubhom/schema.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

namespace {

std::string tuple_label(const std::vector<std::string>& names,
                        const std::vector<std::size_t>& tuple) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) os << ",";
    os << names[tuple[k]];
  }
  os << ")";
  return os.str();
}

}  // namespace

SimplicialSchema::SimplicialSchema(std::vector<std::string> vertices,
                                   std::vector<std::vector<std::size_t>> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  std::set<std::vector<std::size_t>> present;
  for (auto& f : faces_) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw NotDownwardClosed("faces must be nonempty vertex sets");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw NotDownwardClosed("face with a repeated vertex");
    if (f.back() >= vertices_.size())
      throw IndexOutOfRange("face mentions an unknown vertex");
    present.insert(f);
  }
  faces_.assign(present.begin(), present.end());
  for (const auto& f : faces_) {
    if (f.size() == 1) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != drop) sub.push_back(f[k]);
      if (!present.count(sub))
        throw NotDownwardClosed("missing subset " + tuple_label(vertices_, sub) + " of " +
                                tuple_label(vertices_, f));
    }
  }
}

SimplicialSchema SimplicialSchema::from_maximal(std::vector<std::string> vertices,
                                                std::vector<std::vector<std::size_t>> maximal) {
  std::set<std::vector<std::size_t>> closed;
  // Subsets via bitmask; maximal faces stay small in this artifact.
  for (auto f : maximal) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (std::size_t mask = 1; mask < (std::size_t(1) << f.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (mask & (std::size_t(1) << k)) sub.push_back(f[k]);
      closed.insert(std::move(sub));
    }
  }
  return SimplicialSchema(std::move(vertices),
                          std::vector<std::vector<std::size_t>>(closed.begin(), closed.end()));
}

ChainComplex schema_complex(const SimplicialSchema& K) {
  std::size_t top = 0;
  for (const auto& f : K.faces()) top = std::max(top, f.size() - 1);

  std::vector<std::vector<std::vector<std::size_t>>> by_degree(top + 1);
  for (const auto& f : K.faces()) by_degree[f.size() - 1].push_back(f);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  std::vector<std::vector<std::string>> labels(top + 1);
  for (std::size_t n = 0; n <= top; ++n)
    for (std::size_t k = 0; k < by_degree[n].size(); ++k) {
      index[n][by_degree[n][k]] = k;
      labels[n].push_back(tuple_label(K.vertices(), by_degree[n][k]));
    }

  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix d(by_degree[n - 1].size(), by_degree[n].size());
    for (std::size_t c = 0; c < by_degree[n].size(); ++c) {
      const auto& tuple = by_degree[n][c];
      for (std::size_t drop = 0; drop <= n; ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k <= n; ++k)
          if (k != drop) sub.push_back(tuple[k]);
        d.at(index[n - 1].at(sub), c) += (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         std::set<std::pair<std::size_t, std::size_t>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const std::size_t n = elements_.size();
  for (const auto& [a, b] : leq_)
    if (a >= n || b >= n) throw IndexOutOfRange("relation mentions an unknown element");
  for (std::size_t i = 0; i < n; ++i) leq_.insert({i, i});
  for (const auto& [a, b] : leq_)
    if (a != b && leq_.count({b, a}))
      throw NotAPoset("antisymmetry fails between '" + elements_[a] + "' and '" + elements_[b] +
                      "'");
  for (const auto& [a, b] : leq_)
    for (std::size_t c = 0; c < n; ++c)
      if (leq_.count({b, c}) && !leq_.count({a, c}))
        throw NotAPoset("transitivity fails through '" + elements_[b] + "'");
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [a, b] : covers) reach.at(a).at(b) = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::set<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) leq.insert({i, j});
  return FinitePoset(std::move(elements), std::move(leq));
}

SimplicialSchema order_complex(const FinitePoset& P) {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> current;
  // Chains as index-ascending tuples of pairwise comparable elements.
  auto extend = [&](auto&& self, std::size_t next_min) -> void {
    for (std::size_t v = next_min; v < P.size(); ++v) {
      bool comparable = true;
      for (std::size_t u : current)
        if (!P.leq(u, v) && !P.leq(v, u)) {
          comparable = false;
          break;
        }
      if (!comparable) continue;
      current.push_back(v);
      chains.push_back(current);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < P.size(); ++i) names.push_back(P.label(i));
  return SimplicialSchema(std::move(names), std::move(chains));
}

std::vector<FGAbelianGroup> poset_homology(const FinitePoset& P) {
  return homology_of_complex(schema_complex(order_complex(P)));
}

bool is_acyclic(const FinitePoset& P) {
  std::vector<FGAbelianGroup> h = poset_homology(P);
  if (h.empty() || !(h[0] == FGAbelianGroup::free(1))) return false;
  for (std::size_t n = 1; n < h.size(); ++n)
    if (!h[n].is_trivial()) return false;
  return true;
}

}  // namespace cubhom
