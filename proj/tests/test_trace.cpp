#include <algorithm>
#include <random>

#include <doctest.h>

#include "cubhom/errors.hpp"
#include "cubhom/schema.hpp"
#include "cubhom/trace.hpp"
#include "oracle.hpp"

using namespace cubhom;

namespace {

IndependenceAlphabet abc_free() { return {{"a", "b", "c"}, {}}; }
IndependenceAlphabet abc_full() {
  return {{"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}};
}
IndependenceAlphabet ab_commuting() { return {{"a", "b"}, {{"a", "b"}}}; }

Trace parse(const IndependenceAlphabet& A, const std::string& letters) {
  std::vector<std::size_t> w;
  for (char ch : letters) w.push_back(A.event_index(std::string(1, ch)));
  return Trace(A, std::move(w));
}

std::size_t count_cliques(const IndependenceAlphabet& A, std::size_t n) {
  return cliques(A, n).size();
}

bool extends_clique(const IndependenceAlphabet& A, const std::vector<std::size_t>& c,
                    std::size_t g) {
  if (std::find(c.begin(), c.end(), g) != c.end()) return false;
  for (std::size_t u : c)
    if (!A.independent(u, g)) return false;
  return true;
}

}  // namespace

TEST_CASE("clique enumeration") {
  CHECK(cliques(abc_free(), 2).empty());
  auto full2 = cliques(abc_full(), 2);
  REQUIRE(full2.size() == 3);
  CHECK(full2[0] == std::vector<std::size_t>{0, 1});
  CHECK(full2[1] == std::vector<std::size_t>{0, 2});
  CHECK(full2[2] == std::vector<std::size_t>{1, 2});

  IndependenceAlphabet partial({"a", "b", "c"}, {{"a", "b"}});
  CHECK(cliques(partial, 2) == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(cliques(partial, 3).empty());
  CHECK(cliques(partial, 0) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(partial.max_clique_size() == 2);
}

TEST_CASE("trace multiplication and equality") {
  IndependenceAlphabet A = ab_commuting();
  CHECK(trace_eq(A, parse(A, "ab"), parse(A, "ba")));

  IndependenceAlphabet B = abc_free();
  CHECK(!trace_eq(B, parse(B, "ab"), parse(B, "ba")));
  CHECK(trace_mul(B, parse(B, "abc"), parse(B, "ba")).length() == 5);

  CHECK_THROWS_AS(B.event_index("z"), UnknownEvent);
}

TEST_CASE("normal form is the least word of the commutation class") {
  // With I = {(a,b),(b,c)} the class of cab is {cab, cba, bca}; descending
  // adjacent swaps alone would stall on cab itself.
  IndependenceAlphabet A({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(parse(A, "cab").to_string(A) == "b.c.a");
  CHECK(parse(A, "cba").to_string(A) == "b.c.a");
  CHECK(parse(A, "bca").to_string(A) == "b.c.a");
  CHECK(parse(A, "abc").to_string(A) == "a.b.c");
}

TEST_CASE("one adjacent commutation never changes the normal form") {
  std::mt19937_64 rng(5150);
  IndependenceAlphabet A({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
  std::uniform_int_distribution<std::size_t> letter(0, 3), len(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::size_t> w(len(rng));
    for (auto& v : w) v = letter(rng);
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
    std::size_t p = pos(rng);
    if (!A.independent(w[p], w[p + 1])) continue;
    std::vector<std::size_t> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    CHECK(Trace(A, w) == Trace(A, swapped));
  }
}

TEST_CASE("left and right division") {
  IndependenceAlphabet A = abc_free();
  Trace ab = parse(A, "ab");
  auto divs = left_divisors(A, ab);
  REQUIRE(divs.size() == 3);  // 1, a, ab
  CHECK(divs[0].empty());
  CHECK(divs[1] == parse(A, "a"));
  CHECK(divs[2] == ab);
  CHECK(!left_quotient(A, ab, parse(A, "b")));
  CHECK(right_quotient(A, ab, parse(A, "b")) == parse(A, "a"));
  CHECK(!right_quotient(A, ab, parse(A, "a")));

  IndependenceAlphabet C = ab_commuting();
  CHECK(left_quotient(C, parse(C, "ab"), parse(C, "b")) == parse(C, "a"));
}

TEST_CASE("T(E,I) as a precubical set") {
  PrecubicalSet free3 = t_precubical(abc_free());
  CHECK(free3.size(0) == 1);
  CHECK(free3.size(1) == 3);
  CHECK(free3.top_degree() == 1);

  PrecubicalSet full3 = t_precubical(abc_full());
  CHECK(full3.size(0) == 1);
  CHECK(full3.size(1) == 3);
  CHECK(full3.size(2) == 3);
  CHECK(full3.size(3) == 1);

  // Both faces coincide, so every signed difference cancels termwise.
  ChainComplex C = integral_complex(full3);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(C.boundary(n).is_zero());
  auto h = homology_of_complex(C);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(h[n] == FGAbelianGroup::free(count_cliques(abc_full(), n)));
}

TEST_CASE("Leech complex with the constant system has vanishing differentials") {
  for (const auto& A : {abc_full(), ab_commuting(), abc_free()}) {
    ChainComplex C = leech_complex(A, CliqueSystem::constant_z(A));
    auto h = homology_of_complex(C);
    for (std::size_t n = 0; n < h.size(); ++n)
      CHECK(h[n] == FGAbelianGroup::free(count_cliques(A, n)));
  }
}

TEST_CASE("Leech complex on one generator with asymmetric maps") {
  IndependenceAlphabet A({"a"}, {});
  CliqueSystem F;
  F.set_rank({}, 1);
  F.set_rank({0}, 1);
  IntMatrix one = IntMatrix::identity(1), zero(1, 1);
  F.set_right({}, 0, one);  // F(1,a) = [1]
  F.set_left({}, 0, zero);  // F(a,1) = [0]
  ChainComplex C = leech_complex(A, F);
  CHECK(C.boundary(1) == IntMatrix::from_rows({{-1}}));
  auto h = homology_of_complex(C);
  CHECK(h[0].is_trivial());
  CHECK(h[1].is_trivial());
}

TEST_CASE("rank-0 clique system kills every group") {
  IndependenceAlphabet A = ab_commuting();
  CliqueSystem F;
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& c : cliques(A, n)) {
      F.set_rank(c, 0);
      for (std::size_t g = 0; g < 2; ++g)
        if (extends_clique(A, c, g)) {
          F.set_left(c, g, IntMatrix(0, 0));
          F.set_right(c, g, IntMatrix(0, 0));
        }
    }
  auto h = homology_of_complex(leech_complex(A, F));
  for (const auto& g : h) CHECK(g.is_trivial());
}

TEST_CASE("trivial right module on two commuting generators gives the torus") {
  IndependenceAlphabet A = ab_commuting();
  RightModule G{1, {IntMatrix::identity(1), IntMatrix::identity(1)}};
  auto h = homology_of_complex(right_module_complex(A, G));
  REQUIRE(h.size() == 3);
  CHECK(h[0] == FGAbelianGroup::free(1));
  CHECK(h[1] == FGAbelianGroup::free(2));
  CHECK(h[2] == FGAbelianGroup::free(1));
}

TEST_CASE("trivial module over a free monoid sees only vertices and edges") {
  IndependenceAlphabet A = abc_free();
  RightModule G{1, {IntMatrix::identity(1), IntMatrix::identity(1), IntMatrix::identity(1)}};
  auto h = homology_of_complex(right_module_complex(A, G));
  REQUIRE(h.size() == 2);
  CHECK(h[0] == FGAbelianGroup::free(1));
  CHECK(h[1] == FGAbelianGroup::free(3));
}

TEST_CASE("rank-0 module and incompatible actions") {
  IndependenceAlphabet A = ab_commuting();
  RightModule zero{0, {IntMatrix(0, 0), IntMatrix(0, 0)}};
  for (const auto& g : homology_of_complex(right_module_complex(A, zero)))
    CHECK(g.is_trivial());

  RightModule bad{2,
                  {IntMatrix::from_rows({{1, 1}, {0, 1}}), IntMatrix::from_rows({{1, 0}, {1, 1}})}};
  CHECK_THROWS_AS(right_module_complex(A, bad), ActionNotCompatible);
}

TEST_CASE("Leech specializes to the right-module complex") {
  IndependenceAlphabet A = ab_commuting();
  RightModule G{2, {IntMatrix::from_rows({{1, 2}, {0, 1}}), IntMatrix::from_rows({{3, 0}, {0, 3}})}};
  G.validate(A);

  CliqueSystem F;
  IntMatrix id = IntMatrix::identity(2);
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& c : cliques(A, n)) {
      F.set_rank(c, 2);
      for (std::size_t g = 0; g < 2; ++g)
        if (extends_clique(A, c, g)) {
          F.set_left(c, g, id);
          F.set_right(c, g, G.action[g]);
        }
    }
  ChainComplex via_leech = leech_complex(A, F);
  ChainComplex via_module = right_module_complex(A, G);
  for (std::size_t n = 1; n <= 2; ++n) CHECK(via_leech.boundary(n) == via_module.boundary(n));
}

TEST_CASE("Hochschild homology of symmetric bimodules is the clique count") {
  IndependenceAlphabet A = abc_full();
  IntMatrix rho = IntMatrix::from_rows({{1, 1}, {0, 1}});
  Bimodule B{2, {rho, rho, rho}, {rho, rho, rho}};
  auto h = homology_of_complex(hochschild_complex(A, B));
  for (std::size_t n = 0; n < h.size(); ++n)
    CHECK(h[n] == FGAbelianGroup::free(2 * count_cliques(A, n)));
}

TEST_CASE("Hochschild on one generator with lambda = [1], rho = [0]") {
  IndependenceAlphabet A({"a"}, {});
  Bimodule B{1, {IntMatrix::identity(1)}, {IntMatrix(1, 1)}};
  auto h = homology_of_complex(hochschild_complex(A, B));
  CHECK(h[0].is_trivial());
  CHECK(h[1].is_trivial());

  Bimodule zero{0, {IntMatrix(0, 0)}, {IntMatrix(0, 0)}};
  for (const auto& g : homology_of_complex(hochschild_complex(A, zero)))
    CHECK(g.is_trivial());
}

TEST_CASE("complexes vanish above the maximal clique size") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> ne(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t n = ne(rng);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(1, char('a' + k)));
    std::vector<std::pair<std::string, std::string>> indep;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) indep.push_back({names[i], names[j]});
    IndependenceAlphabet A(names, indep);
    std::size_t top = A.max_clique_size();

    ChainComplex C = leech_complex(A, CliqueSystem::constant_z(A));
    CHECK(C.top_degree() == top);
    auto h = homology_of_complex(C, top + 2);
    for (std::size_t k = top + 1; k < h.size(); ++k) CHECK(h[k].is_trivial());
    // Nonvanishing at the top witnessed by the trivial system.
    CHECK(h[top] == FGAbelianGroup::free(count_cliques(A, top)));
  }
}

TEST_CASE("factorization poset of the identity and of a single generator") {
  IndependenceAlphabet A = abc_free();
  FinitePoset unit = factorization_poset(A, Trace());
  REQUIRE(unit.size() == 1);
  CHECK(unit.label(0) == "(1,1,1)");

  FinitePoset single = factorization_poset(A, parse(A, "a"));
  REQUIRE(single.size() == 3);
  // (1,1,a) < (1,a,1) > (a,1,1)
  std::size_t left = 3, mid = 3, right = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (single.label(i) == "(1,1,a)") left = i;
    if (single.label(i) == "(1,a,1)") mid = i;
    if (single.label(i) == "(a,1,1)") right = i;
  }
  REQUIRE(left < 3);
  REQUIRE(mid < 3);
  REQUIRE(right < 3);
  CHECK(single.leq(left, mid));
  CHECK(single.leq(right, mid));
  CHECK(!single.leq(left, right));
  CHECK(!single.leq(mid, left));
}

TEST_CASE("factorization poset of ab with dependent letters is the 5-element fence") {
  IndependenceAlphabet A = abc_free();
  FinitePoset P = factorization_poset(A, parse(A, "ab"));
  REQUIRE(P.size() == 5);
  std::set<std::string> expected = {"(1,1,a.b)", "(1,a,b)", "(a,1,b)", "(a,b,1)", "(a.b,1,1)"};
  std::set<std::string> got;
  for (std::size_t i = 0; i < P.size(); ++i) got.insert(P.label(i));
  CHECK(got == expected);
  std::size_t strict = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j && P.leq(i, j)) ++strict;
  CHECK(strict == 4);  // the two peaks each cover two valleys
  CHECK(is_acyclic(P));
}

TEST_CASE("factorization posets of short traces are acyclic") {
  IndependenceAlphabet A({"a", "b", "c"}, {{"a", "b"}});
  for (const char* w : {"", "a", "ab", "ba", "abc", "cab", "aab"})
    CHECK(is_acyclic(factorization_poset(A, parse(A, w))));
}

TEST_CASE("factorization posets over random 4-event alphabets are acyclic") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> letter(0, 3), len(0, 4);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::string> events = {"a", "b", "c", "d"};
    std::vector<std::pair<std::string, std::string>> indep;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (coin(rng)) indep.push_back({events[i], events[j]});
    IndependenceAlphabet A(events, indep);
    for (int t = 0; t < 4; ++t) {
      std::vector<std::size_t> w(len(rng));
      for (auto& v : w) v = letter(rng);
      CHECK(is_acyclic(factorization_poset(A, Trace(A, w))));
    }
  }
}
