#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubhom/chain.hpp"
#include "cubhom/precubical.hpp"
#include "cubhom/trace.hpp"

namespace cubhom {

// Finite right M(E,I)-set: a total action map per generator, optionally with
// an absorbing base point.
class RightMSet {
 public:
  RightMSet() = default;
  RightMSet(std::vector<std::string> carrier, std::vector<std::vector<std::size_t>> action,
            std::optional<std::size_t> point);

  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& state_name(std::size_t x) const { return carrier_[x]; }
  std::optional<std::size_t> point() const { return point_; }
  std::size_t act(std::size_t x, std::size_t event) const { return action_[event][x]; }
  std::optional<std::size_t> find_state(const std::string& name) const;

  // Independence squares (x a) b = (x b) a for (a,b) in I, and the base point
  // absorbing if present.
  void validate(const IndependenceAlphabet& A) const;

 private:
  std::vector<std::string> carrier_;
  std::vector<std::vector<std::size_t>> action_;  // action_[event][state]
  std::optional<std::size_t> point_;
};

// The precubical set Q_*X: degree-n cells are pairs (x, n-clique); the eps=0
// face drops a letter, the eps=1 face also advances the state.
PrecubicalSet q_precubical(const IndependenceAlphabet& A, const RightMSet& X);

// Coefficients on an M-set: a free abelian group per state and a matrix
// F(x -> x.a) per state and generator.
class MSetSystem {
 public:
  MSetSystem() = default;
  MSetSystem(std::vector<std::size_t> ranks, std::vector<std::vector<IntMatrix>> maps);

  static MSetSystem constant_z(const IndependenceAlphabet& A, const RightMSet& X);

  std::size_t rank(std::size_t x) const { return ranks_[x]; }
  const IntMatrix& map(std::size_t x, std::size_t event) const { return maps_[event][x]; }

  void validate(const IndependenceAlphabet& A, const RightMSet& X) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntMatrix>> maps_;  // maps_[event][state]
};

// C_n = direct sum of F(x) over (x, n-clique); the block of d_n at letter s
// sends the (x, c) summand to (x.a_s, c-a_s) via (-1)^s F(x -> x.a_s) and to
// (x, c-a_s) via -(-1)^s id. Setting include_point = false quotients out the
// base-point subcomplex (not part of the source construction; see README).
ChainComplex mset_complex(const IndependenceAlphabet& A, const RightMSet& X,
                          const MSetSystem& F, bool include_point = true);

// Integral homology of Q_*X, computed both through the precubical set and
// through the constant-Z coefficient complex; the two routes are compared.
std::vector<FGAbelianGroup> integral_mset_homology(const IndependenceAlphabet& A,
                                                   const RightMSet& X);

}  // namespace cubhom
