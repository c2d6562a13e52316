#include "cubhom/ast.hpp"

#include <map>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

std::optional<std::size_t> AsyncTransitionSystem::find_state(const std::string& name) const {
  for (std::size_t s = 0; s < states.size(); ++s)
    if (states[s] == name) return s;
  return std::nullopt;
}

void AsyncTransitionSystem::validate() const {
  if (initial >= states.size()) throw Error("initial state is not a state");
  for (const auto& [s, e, t] : transitions)
    if (s >= states.size() || t >= states.size() || e >= alphabet.size())
      throw Error("transition mentions an unknown state or event");

  std::vector<bool> used(alphabet.size(), false);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> step;
  for (const auto& [s, e, t] : transitions) {
    used[e] = true;
    auto [it, fresh] = step.insert({{s, e}, t});
    if (!fresh && it->second != t) {
      std::ostringstream os;
      os << "event '" << alphabet.events()[e] << "' is nondeterministic at state '"
         << states[s] << "': goes to '" << states[it->second] << "' and '" << states[t] << "'";
      throw NondeterministicEvent(os.str());
    }
  }
  for (std::size_t e = 0; e < alphabet.size(); ++e)
    if (!used[e])
      throw UnusedEvent("event '" + alphabet.events()[e] + "' occurs in no transition");

  for (std::size_t e1 = 0; e1 < alphabet.size(); ++e1)
    for (std::size_t e2 = 0; e2 < alphabet.size(); ++e2) {
      if (e1 == e2 || !alphabet.independent(e1, e2)) continue;
      for (const auto& [s, e, s1] : transitions) {
        if (e != e1) continue;
        auto second = step.find({s1, e2});
        if (second == step.end()) continue;
        std::size_t u = second->second;
        auto other = step.find({s, e2});
        bool ok = other != step.end();
        if (ok) {
          auto close = step.find({other->second, e1});
          ok = close != step.end() && close->second == u;
        }
        if (!ok) {
          std::ostringstream os;
          os << "independence diamond fails at state '" << states[s] << "' for events '"
             << alphabet.events()[e1] << "', '" << alphabet.events()[e2] << "' toward '"
             << states[u] << "'";
          throw BrokenDiamond(os.str());
        }
      }
    }
}

std::pair<IndependenceAlphabet, RightMSet> to_pointed_mset(const AsyncTransitionSystem& T) {
  T.validate();
  std::string point = "*";
  while (T.find_state(point)) point += "*";
  std::vector<std::string> carrier = T.states;
  carrier.push_back(point);
  std::size_t star = carrier.size() - 1;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> step;
  for (const auto& [s, e, t] : T.transitions) step[{s, e}] = t;

  std::vector<std::vector<std::size_t>> action(T.alphabet.size(),
                                               std::vector<std::size_t>(carrier.size(), star));
  for (std::size_t e = 0; e < T.alphabet.size(); ++e)
    for (std::size_t s = 0; s < T.states.size(); ++s) {
      auto it = step.find({s, e});
      action[e][s] = it == step.end() ? star : it->second;
    }
  RightMSet X(std::move(carrier), std::move(action), star);
  X.validate(T.alphabet);  // the induced independence squares, checked not assumed
  return {T.alphabet, X};
}

ChainComplex ast_complex(const AsyncTransitionSystem& T, const MSetSystem& F) {
  auto [alphabet, X] = to_pointed_mset(T);
  return mset_complex(alphabet, X, F);
}

std::vector<FGAbelianGroup> ast_integral_homology(const AsyncTransitionSystem& T,
                                                  std::optional<std::size_t> max_degree) {
  auto [alphabet, X] = to_pointed_mset(T);
  ChainComplex C = mset_complex(alphabet, X, MSetSystem::constant_z(alphabet, X));
  return homology_of_complex(C, max_degree.value_or(alphabet.max_clique_size()));
}

}  // namespace cubhom
