#include "cubhom/trace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

IndependenceAlphabet::IndependenceAlphabet(
    std::vector<std::string> events,
    const std::vector<std::pair<std::string, std::string>>& independence)
    : events_(std::move(events)) {
  std::set<std::string> seen;
  for (const auto& e : events_)
    if (!seen.insert(e).second) throw UnknownEvent("duplicate event '" + e + "'");
  indep_.assign(events_.size(), std::vector<bool>(events_.size(), false));
  for (const auto& [a, b] : independence) {
    std::size_t ia = event_index(a), ib = event_index(b);
    if (ia == ib)
      throw ActionNotCompatible("independence relation must be irreflexive; got (" + a + "," +
                                b + ")");
    indep_[ia][ib] = indep_[ib][ia] = true;
  }
}

std::size_t IndependenceAlphabet::event_index(const std::string& name) const {
  for (std::size_t k = 0; k < events_.size(); ++k)
    if (events_[k] == name) return k;
  throw UnknownEvent("unknown event '" + name + "'");
}

std::size_t IndependenceAlphabet::max_clique_size() const {
  std::size_t best = 0;
  for (std::size_t n = 0; n <= size(); ++n)
    if (!cliques(*this, n).empty()) best = n;
  return best;
}

namespace {

// Lexicographically least representative: repeatedly emit the smallest letter
// whose occurrence is independent of everything before it. Plain descending
// adjacent swaps can stall in a local minimum, so extraction is done globally.
std::vector<std::size_t> normal_form(const IndependenceAlphabet& A,
                                     std::vector<std::size_t> w) {
  for (std::size_t v : w)
    if (v >= A.size()) throw UnknownEvent("letter index out of range");
  std::vector<std::size_t> out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      bool available = true;
      for (std::size_t q = 0; q < p; ++q)
        if (!A.independent(w[p], w[q])) {
          available = false;
          break;
        }
      if (available && (best == w.size() || w[p] < w[best])) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

Trace::Trace(const IndependenceAlphabet& A, std::vector<std::size_t> word)
    : word_(normal_form(A, std::move(word))) {}

std::string Trace::to_string(const IndependenceAlphabet& A) const {
  if (word_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) os << ".";
    os << A.events()[word_[k]];
  }
  return os.str();
}

Trace trace_mul(const IndependenceAlphabet& A, const Trace& x, const Trace& y) {
  std::vector<std::size_t> w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return Trace(A, std::move(w));
}

bool trace_eq(const IndependenceAlphabet& A, const Trace& x, const Trace& y) {
  (void)A;  // words are already canonical
  return x == y;
}

std::optional<Trace> left_quotient(const IndependenceAlphabet& A, const Trace& t,
                                   const Trace& x) {
  std::vector<std::size_t> r = t.word();
  for (std::size_t letter : x.word()) {
    std::size_t pos = r.size();
    for (std::size_t p = 0; p < r.size(); ++p) {
      if (r[p] != letter) continue;
      bool minimal = true;
      for (std::size_t q = 0; q < p; ++q)
        if (!A.independent(letter, r[q])) {
          minimal = false;
          break;
        }
      if (minimal) pos = p;
      break;  // only the first occurrence of the letter can be minimal
    }
    if (pos == r.size()) return std::nullopt;
    r.erase(r.begin() + pos);
  }
  return Trace(A, std::move(r));
}

std::optional<Trace> right_quotient(const IndependenceAlphabet& A, const Trace& t,
                                    const Trace& y) {
  std::vector<std::size_t> r = t.word();
  const std::vector<std::size_t>& suffix = y.word();
  for (std::size_t k = suffix.size(); k-- > 0;) {
    std::size_t letter = suffix[k];
    std::size_t pos = r.size();
    for (std::size_t p = r.size(); p-- > 0;) {
      if (r[p] != letter) continue;
      bool maximal = true;
      for (std::size_t q = p + 1; q < r.size(); ++q)
        if (!A.independent(letter, r[q])) {
          maximal = false;
          break;
        }
      if (maximal) pos = p;
      break;  // only the last occurrence of the letter can be maximal
    }
    if (pos == r.size()) return std::nullopt;
    r.erase(r.begin() + pos);
  }
  return Trace(A, std::move(r));
}

std::vector<Trace> left_divisors(const IndependenceAlphabet& A, const Trace& t) {
  std::set<Trace> seen{Trace()};
  std::vector<Trace> frontier{Trace()};
  while (!frontier.empty()) {
    std::vector<Trace> next;
    for (const Trace& x : frontier) {
      Trace rest = *left_quotient(A, t, x);
      std::set<std::size_t> tried;
      const auto& w = rest.word();
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (tried.count(w[p])) continue;
        tried.insert(w[p]);
        bool minimal = true;
        for (std::size_t q = 0; q < p; ++q)
          if (!A.independent(w[p], w[q])) {
            minimal = false;
            break;
          }
        if (!minimal) continue;
        std::vector<std::size_t> ext = x.word();
        ext.push_back(w[p]);
        Trace candidate(A, std::move(ext));
        if (seen.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Trace>(seen.begin(), seen.end());
}

std::vector<std::vector<std::size_t>> cliques(const IndependenceAlphabet& A, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t next_min) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = next_min; v < A.size(); ++v) {
      bool ok = true;
      for (std::size_t u : current)
        if (!A.independent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::string clique_name(const IndependenceAlphabet& A, const std::vector<std::size_t>& clique) {
  if (clique.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < clique.size(); ++k) {
    if (k) os << ".";
    os << A.events()[clique[k]];
  }
  return os.str();
}

PrecubicalSet t_precubical(const IndependenceAlphabet& A) {
  PrecubicalSet out;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::size_t top = A.max_clique_size();
  for (std::size_t n = 0; n <= top; ++n)
    for (const auto& c : cliques(A, n)) index[c] = out.add_cell(n, clique_name(A, c));
  for (std::size_t n = 1; n <= top; ++n)
    for (const auto& c : cliques(A, n))
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < n; ++k)
          if (k + 1 != i) sub.push_back(c[k]);
        for (int eps : {0, 1}) out.set_face(n, index[c], i, eps, index[sub]);
      }
  out.validate();
  return out;
}

CliqueSystem CliqueSystem::constant_z(const IndependenceAlphabet& A) {
  CliqueSystem F;
  IntMatrix one = IntMatrix::identity(1);
  for (std::size_t n = 0; n <= A.max_clique_size(); ++n)
    for (const auto& c : cliques(A, n)) {
      F.set_rank(c, 1);
      for (std::size_t a = 0; a < A.size(); ++a) {
        bool extends = std::find(c.begin(), c.end(), a) == c.end();
        for (std::size_t u : c) extends = extends && A.independent(u, a);
        if (extends) {
          F.set_left(c, a, one);
          F.set_right(c, a, one);
        }
      }
    }
  return F;
}

void CliqueSystem::set_rank(const std::vector<std::size_t>& clique, std::size_t rank) {
  ranks_[clique] = rank;
}
void CliqueSystem::set_left(const std::vector<std::size_t>& clique, std::size_t gen,
                            IntMatrix m) {
  left_[{clique, gen}] = std::move(m);
}
void CliqueSystem::set_right(const std::vector<std::size_t>& clique, std::size_t gen,
                             IntMatrix m) {
  right_[{clique, gen}] = std::move(m);
}

std::size_t CliqueSystem::rank(const std::vector<std::size_t>& clique) const {
  auto it = ranks_.find(clique);
  if (it == ranks_.end()) throw RankMismatch("clique system assigns no rank to a clique");
  return it->second;
}

const IntMatrix& CliqueSystem::left(const std::vector<std::size_t>& clique,
                                    std::size_t gen) const {
  auto it = left_.find({clique, gen});
  if (it == left_.end()) throw RankMismatch("clique system misses a left map");
  return it->second;
}

const IntMatrix& CliqueSystem::right(const std::vector<std::size_t>& clique,
                                     std::size_t gen) const {
  auto it = right_.find({clique, gen});
  if (it == right_.end()) throw RankMismatch("clique system misses a right map");
  return it->second;
}

namespace {

std::vector<std::size_t> clique_without(const std::vector<std::size_t>& c, std::size_t pos) {
  std::vector<std::size_t> sub;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k != pos) sub.push_back(c[k]);
  return sub;
}

}  // namespace

void CliqueSystem::validate(const IndependenceAlphabet& A) const {
  std::size_t top = A.max_clique_size();
  for (std::size_t n = 0; n <= top; ++n)
    for (const auto& c : cliques(A, n)) rank(c);

  for (std::size_t n = 1; n <= top; ++n)
    for (const auto& c : cliques(A, n))
      for (std::size_t s = 0; s < n; ++s) {
        auto sub = clique_without(c, s);
        for (const IntMatrix* m : {&left(sub, c[s]), &right(sub, c[s])})
          if (m->rows() != rank(sub) || m->cols() != rank(c))
            throw RankMismatch("clique map for '" + clique_name(A, c) +
                               "' does not match the assigned ranks");
      }

  // Square functoriality: removing two generators commutes for each of the
  // four left/right mode combinations.
  for (std::size_t n = 2; n <= top; ++n)
    for (const auto& c : cliques(A, n))
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
          auto no_s = clique_without(c, s);
          auto no_t = clique_without(c, t);
          auto no_st = clique_without(no_s, t - 1);
          for (bool s_left : {false, true})
            for (bool t_left : {false, true}) {
              auto pick = [&](const std::vector<std::size_t>& sub, std::size_t gen,
                              bool use_left) -> const IntMatrix& {
                return use_left ? left(sub, gen) : right(sub, gen);
              };
              IntMatrix via_s = pick(no_st, c[t], t_left) * pick(no_s, c[s], s_left);
              IntMatrix via_t = pick(no_st, c[s], s_left) * pick(no_t, c[t], t_left);
              if (!(via_s == via_t))
                throw FunctorialityViolated("clique system square fails on '" +
                                            clique_name(A, c) + "'");
            }
        }
}

void RightModule::validate(const IndependenceAlphabet& A) const {
  if (action.size() != A.size())
    throw ActionNotCompatible("right module needs one action matrix per event");
  for (const IntMatrix& m : action)
    if (m.rows() != rank || m.cols() != rank)
      throw ActionNotCompatible("action matrix shape does not match the module rank");
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a + 1; b < A.size(); ++b)
      if (A.independent(a, b) && !(action[a] * action[b] == action[b] * action[a]))
        throw ActionNotCompatible("action matrices of independent events '" + A.events()[a] +
                                  "' and '" + A.events()[b] + "' do not commute");
}

void Bimodule::validate(const IndependenceAlphabet& A) const {
  if (left_action.size() != A.size() || right_action.size() != A.size())
    throw ActionNotCompatible("bimodule needs one left and one right matrix per event");
  for (const auto* side : {&left_action, &right_action})
    for (const IntMatrix& m : *side)
      if (m.rows() != rank || m.cols() != rank)
        throw ActionNotCompatible("action matrix shape does not match the bimodule rank");
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      if (a < b && A.independent(a, b)) {
        if (!(left_action[a] * left_action[b] == left_action[b] * left_action[a]) ||
            !(right_action[a] * right_action[b] == right_action[b] * right_action[a]))
          throw ActionNotCompatible("bimodule actions of independent events do not commute");
      }
      if (!(left_action[a] * right_action[b] == right_action[b] * left_action[a]))
        throw ActionNotCompatible("left and right bimodule actions must commute");
    }
}

namespace {

// Shared assembly for the three clique-indexed complexes: the degree-n term is
// a direct sum over n-cliques and the block of d_n at letter s is
// (-1)^s * block(sub-clique, letter).
template <typename RankOf, typename BlockOf>
ChainComplex clique_complex(const IndependenceAlphabet& A, RankOf&& rank_of,
                            BlockOf&& block_of, const std::string& label_prefix) {
  std::size_t top = A.max_clique_size();
  std::vector<std::vector<std::vector<std::size_t>>> by_degree(top + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> offset(top + 1);
  std::vector<std::size_t> total(top + 1, 0);
  std::vector<std::vector<std::string>> labels(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    by_degree[n] = cliques(A, n);
    for (const auto& c : by_degree[n]) {
      offset[n][c] = total[n];
      std::size_t r = rank_of(c);
      for (std::size_t k = 0; k < r; ++k) {
        std::string l = label_prefix + clique_name(A, c);
        if (r > 1) l += ":" + std::to_string(k);
        labels[n].push_back(std::move(l));
      }
      total[n] += r;
    }
  }

  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix d(total[n - 1], total[n]);
    for (const auto& c : by_degree[n])
      for (std::size_t s = 0; s < n; ++s) {
        auto sub = clique_without(c, s);
        Int sign = (s % 2 == 0) ? -1 : 1;  // (-1)^(s+1) with s zero-based
        d.add_block(offset[n - 1][sub], offset[n][c], block_of(sub, c[s]), sign);
      }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

}  // namespace

ChainComplex leech_complex(const IndependenceAlphabet& A, const CliqueSystem& F) {
  F.validate(A);
  return clique_complex(
      A, [&](const std::vector<std::size_t>& c) { return F.rank(c); },
      [&](const std::vector<std::size_t>& sub, std::size_t gen) {
        IntMatrix block = F.right(sub, gen);
        block.add_block(0, 0, F.left(sub, gen), -1);
        return block;
      },
      "");
}

ChainComplex right_module_complex(const IndependenceAlphabet& A, const RightModule& G) {
  G.validate(A);
  IntMatrix id = IntMatrix::identity(G.rank);
  return clique_complex(
      A, [&](const std::vector<std::size_t>&) { return G.rank; },
      [&](const std::vector<std::size_t>&, std::size_t gen) {
        IntMatrix block = G.action[gen];
        block.add_block(0, 0, id, -1);
        return block;
      },
      "");
}

ChainComplex hochschild_complex(const IndependenceAlphabet& A, const Bimodule& B) {
  B.validate(A);
  return clique_complex(
      A, [&](const std::vector<std::size_t>&) { return B.rank; },
      [&](const std::vector<std::size_t>&, std::size_t gen) {
        IntMatrix block = B.left_action[gen];
        block.add_block(0, 0, B.right_action[gen], -1);
        return block;
      },
      "");
}

namespace {

bool commuting_support(const IndependenceAlphabet& A, const Trace& beta) {
  const auto& w = beta.word();
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q)
      if (w[p] != w[q] && !A.independent(w[p], w[q])) return false;
  return true;
}

}  // namespace

FinitePoset factorization_poset(const IndependenceAlphabet& A, const Trace& alpha) {
  struct Element {
    Trace x, beta, y;
  };
  std::vector<Element> elements;
  for (const Trace& x : left_divisors(A, alpha)) {
    Trace rest = *left_quotient(A, alpha, x);
    for (const Trace& beta : left_divisors(A, rest)) {
      if (!commuting_support(A, beta)) continue;
      Trace y = *left_quotient(A, rest, beta);
      elements.push_back({x, beta, y});
    }
  }

  std::vector<std::string> labels;
  for (const Element& e : elements)
    labels.push_back("(" + e.x.to_string(A) + "," + e.beta.to_string(A) + "," +
                     e.y.to_string(A) + ")");

  std::set<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      // elements[i] <= elements[j] iff x_i = x_j v, y_i = w y_j, v b_i w = b_j
      auto v = left_quotient(A, elements[i].x, elements[j].x);
      if (!v) continue;
      auto w = right_quotient(A, elements[i].y, elements[j].y);
      if (!w) continue;
      Trace mid = trace_mul(A, trace_mul(A, *v, elements[i].beta), *w);
      if (mid == elements[j].beta) leq.insert({i, j});
    }
  return FinitePoset(std::move(labels), std::move(leq));
}

}  // namespace cubhom
