#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubhom/integer.hpp"

namespace cubhom {

// Isomorphism type of a finitely generated abelian group,
// Z^free_rank (+) Z/t1 (+) ... (+) Z/tk with t1 | t2 | ... and every ti > 1.
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FGAbelianGroup& rhs) const = default;

  static FGAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FGAbelianGroup trivial() { return {}; }

  // Canonical rendering: "0", "Z", "Z^2 (+) Z/3", ...
  std::string to_string() const;
};

}  // namespace cubhom
