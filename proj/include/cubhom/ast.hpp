#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cubhom/mset.hpp"
#include "cubhom/trace.hpp"

namespace cubhom {

// Asynchronous transition system (S, s0, E, I, Tran): deterministic labelled
// transitions with an independence relation satisfying diamond completion.
struct AsyncTransitionSystem {
  std::vector<std::string> states;
  std::size_t initial = 0;
  IndependenceAlphabet alphabet;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> transitions;  // (s, e, s')

  std::optional<std::size_t> find_state(const std::string& name) const;

  // Conditions (i) every event occurs, (ii) determinism, (iii) independence
  // diamonds; reports the first violation with witnesses.
  void validate() const;
};

// Pointed M(E,I)-set on S + {*} with s.e = s' when (s,e,s') is a transition
// and * otherwise; the independence squares of the result are re-validated
// rather than assumed.
std::pair<IndependenceAlphabet, RightMSet> to_pointed_mset(const AsyncTransitionSystem& T);

// The coefficient complex over the augmented state set (equals the M-set
// complex of the associated pointed set by construction).
ChainComplex ast_complex(const AsyncTransitionSystem& T, const MSetSystem& F);

// Integral homology via Smith reduction; the degree cap defaults to the
// maximal number of mutually independent events.
std::vector<FGAbelianGroup> ast_integral_homology(
    const AsyncTransitionSystem& T, std::optional<std::size_t> max_degree = std::nullopt);

}  // namespace cubhom
