#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubhom/chain.hpp"
#include "cubhom/matrix.hpp"
#include "cubhom/precubical.hpp"
#include "cubhom/schema.hpp"

namespace cubhom {

// Generators E with an irreflexive symmetric independence relation I; the
// declared list order is the total order used for clique normal forms.
class IndependenceAlphabet {
 public:
  IndependenceAlphabet() = default;
  IndependenceAlphabet(std::vector<std::string> events,
                       const std::vector<std::pair<std::string, std::string>>& independence);

  std::size_t size() const { return events_.size(); }
  const std::vector<std::string>& events() const { return events_; }
  std::size_t event_index(const std::string& name) const;  // UnknownEvent
  bool independent(std::size_t a, std::size_t b) const { return indep_[a][b]; }

  // Largest number of mutually commuting generators.
  std::size_t max_clique_size() const;

 private:
  std::vector<std::string> events_;
  std::vector<std::vector<bool>> indep_;
};

// Element of M(E,I), stored as the lexicographically least word of its
// commutation class (letters are event indices).
class Trace {
 public:
  Trace() = default;  // the identity
  Trace(const IndependenceAlphabet& A, std::vector<std::size_t> word);

  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  bool operator==(const Trace&) const = default;
  bool operator<(const Trace& rhs) const { return word_ < rhs.word_; }

  std::string to_string(const IndependenceAlphabet& A) const;  // "1" for the identity

 private:
  std::vector<std::size_t> word_;
};

Trace trace_mul(const IndependenceAlphabet& A, const Trace& x, const Trace& y);
bool trace_eq(const IndependenceAlphabet& A, const Trace& x, const Trace& y);

// x^{-1} t and t y^{-1} when the division exists.
std::optional<Trace> left_quotient(const IndependenceAlphabet& A, const Trace& t, const Trace& x);
std::optional<Trace> right_quotient(const IndependenceAlphabet& A, const Trace& t, const Trace& y);

// All left divisors of t, in lexicographic normal-form order.
std::vector<Trace> left_divisors(const IndependenceAlphabet& A, const Trace& t);

// Ascending pairwise-independent n-tuples, lexicographic; n = 0 gives the
// single empty clique.
std::vector<std::vector<std::size_t>> cliques(const IndependenceAlphabet& A, std::size_t n);

std::string clique_name(const IndependenceAlphabet& A, const std::vector<std::size_t>& clique);

// The precubical set T(E,I): degree-n cells are the n-cliques and both faces
// delete the i-th letter.
PrecubicalSet t_precubical(const IndependenceAlphabet& A);

// Natural-system data on cliques: a free abelian group per clique and, for
// each clique c and generator a with c+{a} a clique, the two matrices
// F(left: via (a,1)) and F(right: via (1,a)) from F(c+{a}) to F(c).
class CliqueSystem {
 public:
  CliqueSystem() = default;
  static CliqueSystem constant_z(const IndependenceAlphabet& A);

  void set_rank(const std::vector<std::size_t>& clique, std::size_t rank);
  void set_left(const std::vector<std::size_t>& clique, std::size_t gen, IntMatrix m);
  void set_right(const std::vector<std::size_t>& clique, std::size_t gen, IntMatrix m);

  std::size_t rank(const std::vector<std::size_t>& clique) const;
  const IntMatrix& left(const std::vector<std::size_t>& clique, std::size_t gen) const;
  const IntMatrix& right(const std::vector<std::size_t>& clique, std::size_t gen) const;

  void validate(const IndependenceAlphabet& A) const;

 private:
  std::map<std::vector<std::size_t>, std::size_t> ranks_;
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, IntMatrix> left_, right_;
};

// Z^rank with one action matrix per generator; the action must factor through
// M(E,I), i.e. matrices of independent generators commute.
struct RightModule {
  std::size_t rank = 0;
  std::vector<IntMatrix> action;  // one matrix per event

  void validate(const IndependenceAlphabet& A) const;
};

struct Bimodule {
  std::size_t rank = 0;
  std::vector<IntMatrix> left_action;
  std::vector<IntMatrix> right_action;

  void validate(const IndependenceAlphabet& A) const;
};

// C_n = direct sum of F over n-cliques; block s of d_n is
// (-1)^s (F(right of a_s) - F(left of a_s)).
ChainComplex leech_complex(const IndependenceAlphabet& A, const CliqueSystem& F);

// C_n = direct sum of G over n-cliques; block s is (-1)^s (rho(a_s) - id).
ChainComplex right_module_complex(const IndependenceAlphabet& A, const RightModule& G);

// C_n = direct sum of B over n-cliques; block s is (-1)^s (lambda(a_s) - rho(a_s)).
ChainComplex hochschild_complex(const IndependenceAlphabet& A, const Bimodule& B);

// The comma poset of two-sided factorizations x*b*y = alpha whose middle part
// is a product of pairwise-commuting generators; (x,b,y) <= (x',b',y') iff
// x = x'v, y = wy' and v*b*w = b'.
FinitePoset factorization_poset(const IndependenceAlphabet& A, const Trace& alpha);

}  // namespace cubhom
