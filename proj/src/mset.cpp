#include "cubhom/mset.hpp"

#include <map>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

RightMSet::RightMSet(std::vector<std::string> carrier,
                     std::vector<std::vector<std::size_t>> action,
                     std::optional<std::size_t> point)
    : carrier_(std::move(carrier)), action_(std::move(action)), point_(point) {}

std::optional<std::size_t> RightMSet::find_state(const std::string& name) const {
  for (std::size_t x = 0; x < carrier_.size(); ++x)
    if (carrier_[x] == name) return x;
  return std::nullopt;
}

void RightMSet::validate(const IndependenceAlphabet& A) const {
  if (action_.size() != A.size())
    throw ActionNotCompatible("M-set needs one action map per event");
  for (const auto& column : action_) {
    if (column.size() != carrier_.size())
      throw ActionNotCompatible("action map does not cover the carrier");
    for (std::size_t y : column)
      if (y >= carrier_.size()) throw ActionNotCompatible("action leaves the carrier");
  }
  if (point_ && *point_ >= carrier_.size())
    throw ActionNotCompatible("base point is not a carrier element");
  if (point_)
    for (std::size_t e = 0; e < A.size(); ++e)
      if (act(*point_, e) != *point_)
        throw ActionNotCompatible("base point must be absorbing, but '" +
                                  carrier_[*point_] + "' moves under '" + A.events()[e] + "'");
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a + 1; b < A.size(); ++b) {
      if (!A.independent(a, b)) continue;
      for (std::size_t x = 0; x < carrier_.size(); ++x)
        if (act(act(x, a), b) != act(act(x, b), a)) {
          std::ostringstream os;
          os << "independence square fails at state '" << carrier_[x] << "' with events '"
             << A.events()[a] << "', '" << A.events()[b] << "'";
          throw ActionNotCompatible(os.str());
        }
    }
}

namespace {

std::string cell_label(const RightMSet& X, const IndependenceAlphabet& A, std::size_t x,
                       const std::vector<std::size_t>& clique) {
  if (clique.empty()) return X.state_name(x);
  return X.state_name(x) + "|" + clique_name(A, clique);
}

}  // namespace

PrecubicalSet q_precubical(const IndependenceAlphabet& A, const RightMSet& X) {
  X.validate(A);
  std::size_t top = A.max_clique_size();
  PrecubicalSet out;
  // Basis order: states in declared order, cliques lexicographic within each.
  std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t>> index(
      top + 1);
  for (std::size_t n = 0; n <= top; ++n)
    for (std::size_t x = 0; x < X.size(); ++x)
      for (const auto& c : cliques(A, n))
        index[n][{x, c}] = out.add_cell(n, cell_label(X, A, x, c));
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t x = 0; x < X.size(); ++x)
      for (const auto& c : cliques(A, n)) {
        std::size_t cell = index[n].at({x, c});
        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<std::size_t> sub;
          for (std::size_t k = 0; k < n; ++k)
            if (k + 1 != i) sub.push_back(c[k]);
          out.set_face(n, cell, i, 0, index[n - 1].at({x, sub}));
          out.set_face(n, cell, i, 1, index[n - 1].at({X.act(x, c[i - 1]), sub}));
        }
      }
  out.validate();
  return out;
}

MSetSystem::MSetSystem(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> maps)
    : ranks_(std::move(ranks)), maps_(std::move(maps)) {}

MSetSystem MSetSystem::constant_z(const IndependenceAlphabet& A, const RightMSet& X) {
  std::vector<std::size_t> ranks(X.size(), 1);
  std::vector<std::vector<IntMatrix>> maps(
      A.size(), std::vector<IntMatrix>(X.size(), IntMatrix::identity(1)));
  return MSetSystem(std::move(ranks), std::move(maps));
}

void MSetSystem::validate(const IndependenceAlphabet& A, const RightMSet& X) const {
  if (ranks_.size() != X.size())
    throw RankMismatch("M-set system does not assign a rank to every state");
  if (maps_.size() != A.size())
    throw RankMismatch("M-set system needs one family of maps per event");
  for (std::size_t e = 0; e < A.size(); ++e) {
    if (maps_[e].size() != X.size())
      throw RankMismatch("M-set system misses transition maps for some state");
    for (std::size_t x = 0; x < X.size(); ++x) {
      const IntMatrix& m = maps_[e][x];
      if (m.rows() != rank(X.act(x, e)) || m.cols() != rank(x)) {
        std::ostringstream os;
        os << "map F(" << X.state_name(x) << " -> " << X.state_name(X.act(x, e)) << ") via '"
           << A.events()[e] << "' has shape " << m.rows() << "x" << m.cols() << ", expected "
           << rank(X.act(x, e)) << "x" << rank(x);
        throw RankMismatch(os.str());
      }
    }
  }
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a + 1; b < A.size(); ++b) {
      if (!A.independent(a, b)) continue;
      for (std::size_t x = 0; x < X.size(); ++x) {
        IntMatrix via_a = map(X.act(x, a), b) * map(x, a);
        IntMatrix via_b = map(X.act(x, b), a) * map(x, b);
        if (!(via_a == via_b))
          throw FunctorialityViolated("M-set system square fails at state '" +
                                      X.state_name(x) + "' with events '" + A.events()[a] +
                                      "', '" + A.events()[b] + "'");
      }
    }
}

ChainComplex mset_complex(const IndependenceAlphabet& A, const RightMSet& X,
                          const MSetSystem& F, bool include_point) {
  X.validate(A);
  F.validate(A, X);
  std::size_t top = A.max_clique_size();
  auto skip = [&](std::size_t x) {
    return !include_point && X.point() && *X.point() == x;
  };

  std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t>> offset(
      top + 1);
  std::vector<std::size_t> total(top + 1, 0);
  std::vector<std::vector<std::string>> labels(top + 1);
  std::vector<std::vector<std::vector<std::size_t>>> by_degree(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    by_degree[n] = cliques(A, n);
    for (std::size_t x = 0; x < X.size(); ++x) {
      if (skip(x)) continue;
      for (const auto& c : by_degree[n]) {
        offset[n][{x, c}] = total[n];
        std::size_t r = F.rank(x);
        for (std::size_t k = 0; k < r; ++k) {
          std::string l = cell_label(X, A, x, c);
          if (r > 1) l += ":" + std::to_string(k);
          labels[n].push_back(std::move(l));
        }
        total[n] += r;
      }
    }
  }

  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix d(total[n - 1], total[n]);
    IntMatrix id;  // identity blocks per rank, built on demand
    for (std::size_t x = 0; x < X.size(); ++x) {
      if (skip(x)) continue;
      for (const auto& c : by_degree[n]) {
        std::size_t col = offset[n].at({x, c});
        for (std::size_t s = 0; s < n; ++s) {
          std::vector<std::size_t> sub;
          for (std::size_t k = 0; k < n; ++k)
            if (k != s) sub.push_back(c[k]);
          Int sign = (s % 2 == 0) ? -1 : 1;  // (-1)^(s+1) with s zero-based
          std::size_t xa = X.act(x, c[s]);
          if (!skip(xa)) d.add_block(offset[n - 1].at({xa, sub}), col, F.map(x, c[s]), sign);
          if (id.rows() != F.rank(x)) id = IntMatrix::identity(F.rank(x));
          d.add_block(offset[n - 1].at({x, sub}), col, id, -sign);
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

std::vector<FGAbelianGroup> integral_mset_homology(const IndependenceAlphabet& A,
                                                   const RightMSet& X) {
  auto via_precubical = homology_of_complex(integral_complex(q_precubical(A, X)));
  auto via_coefficients =
      homology_of_complex(mset_complex(A, X, MSetSystem::constant_z(A, X)));
  if (via_precubical != via_coefficients)
    throw Error("integral M-set homology routes disagree");
  return via_precubical;
}

}  // namespace cubhom
