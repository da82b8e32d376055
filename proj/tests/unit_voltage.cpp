#include <doctest.h>

#include "plancover/corpus.hpp"
#include "plancover/voltage.hpp"
#include "test_helpers.hpp"

using namespace plancover;
using plancover::testing::make_graph;

TEST_CASE("permutations compose, invert and enumerate in lexicographic order") {
  Permutation id = Permutation::identity(3);
  Permutation t = Permutation::transposition(3, 0, 1);
  CHECK(t.then(t) == id);
  CHECK(t.inverse() == t);
  Permutation cycle({1, 2, 0});
  CHECK(cycle.then(cycle).then(cycle) == id);
  CHECK(cycle.inverse() == Permutation({2, 0, 1}));
  CHECK(cycle(0) == 1);

  auto s3 = symmetric_group(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == id);
  for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);

  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);  // not a bijection
}

TEST_CASE("a voltage cover of the triangle with a swap is the six-cycle") {
  GraphPtr base = cycle_graph(3);
  std::vector<Permutation> volts = {Permutation::identity(2), Permutation::identity(2),
                                    Permutation::transposition(2, 0, 1)};
  CoverMap f = voltage_cover(base, voltages_from_edges(*base, 2, volts));
  CHECK(f.total().vertex_count() == 6);
  CHECK(f.total().edge_count() == 6);
  CHECK(f.total().connected());
  for (Vertex v = 0; v < 6; ++v) CHECK(f.total().degree(v) == 2);
  CHECK(classify(f).kind == CoverKind::kUnbranched);
  CHECK(classify(f).degree == 2);
  // Derived ids are base ids with a fiber index.
  CHECK(f.total().vertex_id(0) == "1#0");
  CHECK(f.total().edge_id(5) == "c3#1");
}

TEST_CASE("identity voltages give the disconnected trivial cover") {
  GraphPtr base = cycle_graph(3);
  std::vector<Permutation> volts(3, Permutation::identity(2));
  CoverMap f = voltage_cover(base, voltages_from_edges(*base, 2, volts));
  CHECK_FALSE(f.total().connected());
  CHECK(classify(f).kind == CoverKind::kUnbranched);
}

TEST_CASE("voltage covers of cyclic type are regular") {
  GraphPtr base = bouquet(2);
  std::vector<Permutation> volts = {Permutation({1, 2, 0}), Permutation::identity(3)};
  CoverMap f = voltage_cover(base, voltages_from_edges(*base, 3, volts));
  CHECK(f.total().connected());
  DeckGroup deck = deck_group(f);
  CHECK(deck.order() == 3);
  CHECK(is_regular(f, deck));
}

TEST_CASE("voltage validation rejects non-inverse reverse darts") {
  GraphPtr base = cycle_graph(3);
  VoltageAssignment alpha;
  alpha.fiber_size = 3;
  alpha.dart_voltage.assign(6, Permutation::identity(3));
  alpha.dart_voltage[0] = Permutation({1, 2, 0});  // reverse dart left at identity
  CHECK_THROWS_AS((void)voltage_cover(base, alpha), Error);
}

TEST_CASE("connected double cover counts match the cotree formula") {
  CHECK(connected_double_covers(k4()).size() == 7);       // 2^3 - 1
  CHECK(connected_double_covers(cycle_graph(3)).size() == 1);
  CHECK(connected_double_covers(q3()).size() == 31);      // 2^5 - 1
  for (const CoverMap& f : connected_double_covers(k4())) {
    CHECK(f.total().connected());
    CHECK(classify(f).kind == CoverKind::kUnbranched);
    CHECK(classify(f).degree == 2);
  }
}

TEST_CASE("every connected double cover is regular") {
  for (GraphPtr g : {k4(), cycle_graph(3), cycle_graph(4), q3()}) {
    for (const CoverMap& f : connected_double_covers(g)) {
      DeckGroup deck = deck_group(f);
      CHECK(deck.order() == 2);
      CHECK(is_regular(f, deck));
    }
  }
}

TEST_CASE("the cube appears among the double covers of the tetrahedron") {
  CoverMap antipodal = antipodal_cover_of_k4();
  int hits = 0;
  for (const CoverMap& f : connected_double_covers(k4())) {
    if (!cover_isomorphisms(f, antipodal).empty()) ++hits;
  }
  CHECK(hits == 1);
}

TEST_CASE("double cover enumeration honours its budget") {
  Budget tiny;
  tiny.max_items = 3;
  CHECK_THROWS_AS((void)connected_double_covers(k4(), tiny), BudgetExceeded);
}
