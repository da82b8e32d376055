#include <doctest.h>

#include <algorithm>

#include "plancover/corpus.hpp"
#include "plancover/cover.hpp"
#include "test_helpers.hpp"

using namespace plancover;
using plancover::testing::make_graph;

TEST_CASE("the identity map is an unbranched cover of degree one") {
  CoverClass c = classify(identity_cover(k4()));
  CHECK(c.kind == CoverKind::kUnbranched);
  CHECK(c.degree == 1);
  CHECK(c.singular_vertices.empty());
}

TEST_CASE("the antipodal quotient of the cube is an unbranched double cover") {
  CoverMap f = antipodal_cover_of_k4();
  CHECK(f.total().vertex_count() == 8);
  CHECK(f.base().vertex_count() == 4);
  CoverClass c = classify(f);
  CHECK(c.kind == CoverKind::kUnbranched);
  CHECK(c.degree == 2);
  CHECK(c.singular_vertices.empty());
  // Every vertex and edge fiber has exactly two elements.
  for (Vertex v = 0; v < 4; ++v) CHECK(f.vertex_fiber(v).size() == 2);
  for (Edge e = 0; e < 6; ++e) CHECK(f.edge_fiber(e).size() == 2);
}

TEST_CASE("the slit construction is a branched double cover with one singular vertex") {
  CoverMap f = slit_double_cover_of_k4().cover;
  CoverClass c = classify(f);
  CHECK(c.kind == CoverKind::kBranched);
  CHECK(c.degree == 2);
  REQUIRE(c.singular_vertices.size() == 1);
  CHECK(f.total().vertex_id(c.singular_vertices[0]) == "4");
  CHECK(f.local_degree(c.singular_vertices[0]) == 2);
}

TEST_CASE("a locally onto but non-uniform map is a weak cover") {
  CoverClass c = classify(weak_cover_example());
  CHECK(c.kind == CoverKind::kWeak);
  CHECK_FALSE(c.is_cover());
  CHECK_FALSE(c.witnesses.empty());
}

TEST_CASE("a map missing a fiber entirely is invalid") {
  GraphPtr base = make_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, {"uv", "vw"});
  GraphPtr total = make_graph({"a", "b"}, {{"a", "b"}}, {"ab"});
  CoverMap f = build_cover(total, base, {{"a", "u"}, {"b", "v"}}, {{"ab.0", "uv.0"}, {"ab.1", "uv.1"}});
  CoverClass c = classify(f);
  CHECK(c.kind == CoverKind::kInvalid);
  CHECK_FALSE(c.witnesses.empty());
}

TEST_CASE("the symbolic cover builder rejects incoherent maps") {
  GraphPtr base = make_graph({"u", "v"}, {{"u", "v"}}, {"uv"});
  GraphPtr total = make_graph({"a", "b"}, {{"a", "b"}}, {"ab"});
  // Dart map not compatible with the vertex map.
  CHECK_THROWS_AS((void)build_cover(total, base, {{"a", "v"}, {"b", "u"}},
                                    {{"ab.0", "uv.0"}, {"ab.1", "uv.1"}}),
                  Error);
  // Dart map not reversal-equivariant.
  CHECK_THROWS_AS((void)build_cover(total, base, {{"a", "u"}, {"b", "v"}},
                                    {{"ab.0", "uv.0"}, {"ab.1", "uv.0"}}),
                  Error);
  // Missing assignments.
  CHECK_THROWS_AS((void)build_cover(total, base, {{"a", "u"}}, {{"ab.0", "uv.0"}}), Error);
}

TEST_CASE("the deck group of the antipodal cover is the fiber swap") {
  CoverMap f = antipodal_cover_of_k4();
  DeckGroup deck = deck_group(f);
  REQUIRE(deck.order() == 2);
  // The non-identity element swaps every vertex fiber.
  const GraphAutomorphism& swap = deck.elements[1];
  for (Vertex v = 0; v < f.total().vertex_count(); ++v) {
    CHECK(swap.vertex_map[v] != v);
    CHECK(f.vertex_image(swap.vertex_map[v]) == f.vertex_image(v));
  }
  CHECK(is_regular(f, deck));
}

TEST_CASE("deck transformations fix the identity cover") {
  DeckGroup deck = deck_group(identity_cover(k4()));
  CHECK(deck.order() == 1);
  CHECK(is_regular(identity_cover(k4()), deck));
}

TEST_CASE("the branched slit cover is regular") {
  CoverMap f = slit_double_cover_of_k4().cover;
  DeckGroup deck = deck_group(f);
  CHECK(deck.order() == 2);  // the sheet swap fixes the singular vertex
  CHECK(is_regular(f, deck));
}

TEST_CASE("cover isomorphisms relate relabeled copies of the same cover") {
  CoverMap f = antipodal_cover_of_k4();
  auto isos = cover_isomorphisms(f, f);
  CHECK(isos.size() == 2);  // the deck group again
  // A structurally different cover admits none.
  CoverMap g = slit_double_cover_of_k4().cover;
  CHECK(cover_isomorphisms(f, g).empty());
}

TEST_CASE("cover composition multiplies degrees") {
  CoverMap f = antipodal_cover_of_k4();          // q3 -> k4
  CoverMap id_total = identity_cover(f.total_ptr());
  CoverMap composite = compose_covers(f, id_total);
  CHECK(classify(composite).degree == 2);
  CHECK(composite.total().same_structure(f.total()));
  for (Vertex v = 0; v < composite.total().vertex_count(); ++v) {
    CHECK(composite.vertex_image(v) == f.vertex_image(v));
  }
}
