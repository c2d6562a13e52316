#include <doctest.h>

#include "cubhom/errors.hpp"
#include "cubhom/mset.hpp"
#include "cubhom/schema.hpp"
#include "oracle.hpp"

using namespace cubhom;

namespace {

IndependenceAlphabet two_commuting() { return {{"a", "b"}, {{"a", "b"}}}; }

RightMSet one_point(const IndependenceAlphabet& A) {
  return RightMSet({"*"}, std::vector<std::vector<std::size_t>>(A.size(), {0}), 0);
}

// X = {x0, *} with x0.a = * for every generator.
RightMSet two_point(const IndependenceAlphabet& A) {
  return RightMSet({"x0", "*"}, std::vector<std::vector<std::size_t>>(A.size(), {1, 1}), 1);
}

MSetSystem z_at_x0(const IndependenceAlphabet& A, const RightMSet&) {
  std::vector<std::size_t> ranks = {1, 0};
  std::vector<std::vector<IntMatrix>> maps(
      A.size(), std::vector<IntMatrix>{IntMatrix(0, 1), IntMatrix(0, 0)});
  return MSetSystem(std::move(ranks), std::move(maps));
}

}  // namespace

TEST_CASE("Q of the one-point set is the clique complex with coinciding faces") {
  IndependenceAlphabet A = two_commuting();
  PrecubicalSet Q = q_precubical(A, one_point(A));
  CHECK(Q.size(0) == 1);
  CHECK(Q.size(1) == 2);
  CHECK(Q.size(2) == 1);
  auto h = homology_of_complex(integral_complex(Q));
  CHECK(h[0] == FGAbelianGroup::free(1));
  CHECK(h[1] == FGAbelianGroup::free(2));
  CHECK(h[2] == FGAbelianGroup::free(1));
}

TEST_CASE("Q of the two-point set lists both states per clique") {
  IndependenceAlphabet A = two_commuting();
  PrecubicalSet Q = q_precubical(A, two_point(A));
  CHECK(Q.size(0) == 2);
  CHECK(Q.size(1) == 4);
  CHECK(Q.size(2) == 2);
  CHECK(Q.find_cell(1, "x0|a").has_value());
  CHECK(Q.find_cell(2, "*|a.b").has_value());
}

TEST_CASE("broken independence squares are rejected") {
  IndependenceAlphabet A = two_commuting();
  // x.a = y, x.b = x, y.b = z, y.a = z, z absorbing: (x a) b = z, (x b) a = y.
  RightMSet X({"x", "y", "z"}, {{1, 2, 2}, {0, 2, 2}}, std::nullopt);
  CHECK_THROWS_AS(X.validate(A), ActionNotCompatible);
  CHECK_THROWS_AS(q_precubical(A, X), ActionNotCompatible);
}

TEST_CASE("base point must be absorbing") {
  IndependenceAlphabet A({"a"}, {});
  RightMSet X({"x", "*"}, {{0, 0}}, 1);
  CHECK_THROWS_AS(X.validate(A), ActionNotCompatible);
}

TEST_CASE("constant coefficients equal the integral route matrix for matrix") {
  IndependenceAlphabet A = two_commuting();
  for (const RightMSet& X : {one_point(A), two_point(A)}) {
    ChainComplex via_cells = integral_complex(q_precubical(A, X));
    ChainComplex via_system = mset_complex(A, X, MSetSystem::constant_z(A, X));
    REQUIRE(via_cells.top_degree() == via_system.top_degree());
    for (std::size_t n = 1; n <= via_cells.top_degree(); ++n)
      CHECK(via_cells.boundary(n) == via_system.boundary(n));
  }
}

TEST_CASE("integral homology of one-point sets counts commuting subsets") {
  IndependenceAlphabet free3({"a", "b", "c"}, {});
  auto h = integral_mset_homology(free3, one_point(free3));
  REQUIRE(h.size() == 2);
  CHECK(h[0] == FGAbelianGroup::free(1));
  CHECK(h[1] == FGAbelianGroup::free(3));

  IndependenceAlphabet full2 = two_commuting();
  auto h2 = integral_mset_homology(full2, one_point(full2));
  CHECK(h2[0] == FGAbelianGroup::free(1));
  CHECK(h2[1] == FGAbelianGroup::free(2));
  CHECK(h2[2] == FGAbelianGroup::free(1));
}

TEST_CASE("Z[x0] coefficients shift the schema homology by one degree") {
  for (const IndependenceAlphabet& A :
       {two_commuting(), IndependenceAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
        IndependenceAlphabet({"a", "b", "c"}, {})}) {
    RightMSet X = two_point(A);
    ChainComplex C = mset_complex(A, X, z_at_x0(A, X));
    auto h = homology_of_complex(C);

    // Schema of the independence cliques (nonempty commuting subsets).
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t n = 1; n <= A.max_clique_size(); ++n)
      for (const auto& c : cliques(A, n)) maximal.push_back(c);
    std::vector<std::string> names(A.events());
    auto hs = homology_of_complex(schema_complex(SimplicialSchema::from_maximal(names, maximal)));

    for (std::size_t n = 2; n < h.size(); ++n) {
      FGAbelianGroup expected =
          (n - 1) < hs.size() ? hs[n - 1] : FGAbelianGroup::trivial();
      CHECK(h[n] == expected);
    }
  }
}

TEST_CASE("rank-0 systems produce zero groups") {
  IndependenceAlphabet A = two_commuting();
  RightMSet X = one_point(A);
  MSetSystem F({0}, std::vector<std::vector<IntMatrix>>(2, {IntMatrix(0, 0)}));
  for (const auto& g : homology_of_complex(mset_complex(A, X, F))) CHECK(g.is_trivial());
}

TEST_CASE("excluding the base point quotients out its subcomplex") {
  IndependenceAlphabet A = two_commuting();
  RightMSet X = two_point(A);
  ChainComplex C = mset_complex(A, X, MSetSystem::constant_z(A, X), /*include_point=*/false);
  CHECK(C.rank(0) == 1);
  CHECK(C.rank(1) == 2);
  CHECK(C.rank(2) == 1);
  // The quotient agrees with the Z[x0] coefficient complex.
  ChainComplex Z = mset_complex(A, X, z_at_x0(A, X));
  for (std::size_t n = 1; n <= 2; ++n) CHECK(C.boundary(n) == Z.boundary(n));
}

TEST_CASE("M-set homology matches the naive oracle") {
  IndependenceAlphabet A({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  RightMSet X({"p", "q", "*"}, {{1, 2, 2}, {2, 2, 2}, {0, 1, 2}}, 2);
  SUBCASE("squares hold") { CHECK_NOTHROW(X.validate(A)); }
  ChainComplex C = mset_complex(A, X, MSetSystem::constant_z(A, X));
  CHECK(homology_of_complex(C) == oracle::naive_homology(C));
}
