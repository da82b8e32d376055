#include <doctest.h>

#include <algorithm>

#include "plancover/corpus.hpp"
#include "plancover/scheme.hpp"
#include "test_helpers.hpp"

using namespace plancover;
using plancover::testing::face_edge_ids;
using plancover::testing::face_lengths;
using plancover::testing::make_graph;

namespace {

EmbeddingScheme triangle_scheme(std::vector<std::int8_t> signature) {
  GraphPtr g = cycle_graph(3);
  std::vector<std::vector<Dart>> rotations;
  for (Vertex v = 0; v < g->vertex_count(); ++v) rotations.push_back(g->darts_at(v));
  return EmbeddingScheme(g, rotations, std::move(signature));
}

}  // namespace

TEST_CASE("all-positive triangle embeds in the sphere with two triangular faces") {
  EmbeddingScheme s = triangle_scheme({1, 1, 1});
  auto faces = s.faces();
  REQUIRE(faces.size() == 2);
  CHECK(face_lengths(s) == std::vector<std::size_t>{3, 3});
  for (const FaceWalk& w : faces) {
    for (std::int8_t sign : w.signs) CHECK(sign == 1);
  }
  CHECK(s.euler_characteristic() == 2);
  CHECK(s.orientable());
  CHECK(s.surface_id().name() == "sphere");
}

TEST_CASE("triangle with one negative edge embeds in the projective plane") {
  EmbeddingScheme s = triangle_scheme({1, 1, -1});
  auto faces = s.faces();
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].length() == 6);
  CHECK(s.euler_characteristic() == 1);
  CHECK_FALSE(s.orientable());
  CHECK(s.surface_id().name() == "projective-plane");
}

TEST_CASE("the planar scheme of the complete graph on four vertices") {
  EmbeddingScheme s = k4_planar_scheme();
  auto faces = s.faces();
  REQUIRE(faces.size() == 4);
  CHECK(face_lengths(s) == std::vector<std::size_t>{3, 3, 3, 3});
  // The four triangles of the tetrahedron drawing.
  std::vector<std::vector<std::string>> triangles;
  for (const FaceWalk& w : faces) triangles.push_back(face_edge_ids(s.graph(), w));
  std::sort(triangles.begin(), triangles.end());
  CHECK(triangles == std::vector<std::vector<std::string>>{{"12", "13", "23"},
                                                           {"12", "14", "24"},
                                                           {"13", "14", "34"},
                                                           {"23", "24", "34"}});
  CHECK(s.euler_characteristic() == 2);
  CHECK(s.surface_id().name() == "sphere");
}

TEST_CASE("a positive loop bounds two faces on the sphere") {
  EmbeddingScheme s = default_scheme(bouquet(1));
  CHECK(face_lengths(s) == std::vector<std::size_t>{1, 1});
  CHECK(s.euler_characteristic() == 2);
  CHECK(s.surface_id().name() == "sphere");
}

TEST_CASE("a negative loop is a monogon in the projective plane") {
  EmbeddingScheme s(bouquet(1), std::vector<std::vector<Dart>>{{0, 1}}, {-1});
  auto faces = s.faces();
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].length() == 2);
  CHECK(s.euler_characteristic() == 1);
  CHECK(s.surface_id().name() == "projective-plane");
}

TEST_CASE("interleaved two-loop rotations give the torus and the Klein bottle") {
  GraphPtr g = bouquet(2);
  auto rotations = rotations_from_ids(*g, {{"a.0", "b.0", "a.1", "b.1"}});

  EmbeddingScheme torus(g, rotations, {1, 1});
  CHECK(face_lengths(torus) == std::vector<std::size_t>{4});
  CHECK(torus.euler_characteristic() == 0);
  CHECK(torus.orientable());
  CHECK(torus.surface_id().name() == "torus");

  EmbeddingScheme klein(g, rotations, {-1, 1});
  CHECK(face_lengths(klein) == std::vector<std::size_t>{4});
  CHECK(klein.euler_characteristic() == 0);
  CHECK_FALSE(klein.orientable());
  CHECK(klein.surface_id().name() == "klein-bottle");
}

TEST_CASE("surface names cover both orientation classes") {
  CHECK(SurfaceId{true, 0}.name() == "sphere");
  CHECK(SurfaceId{true, 1}.name() == "torus");
  CHECK(SurfaceId{true, 2}.name() == "genus-2");
  CHECK(SurfaceId{false, 1}.name() == "projective-plane");
  CHECK(SurfaceId{false, 2}.name() == "klein-bottle");
  CHECK(SurfaceId{false, 3}.name() == "crosscap-3");
  CHECK(SurfaceId{true, 2}.euler() == -2);
  CHECK(SurfaceId{false, 3}.euler() == -1);
}

TEST_CASE("a lone vertex counts as a sphere embedding") {
  EmbeddingScheme s = default_scheme(make_graph({"v"}, {}));
  CHECK(s.euler_characteristic() == 2);
  // The single face has no boundary walk, so faces() refuses rather than
  // inventing an empty walk.
  CHECK_THROWS_AS((void)s.faces(), Error);
  CHECK(s.surface_id().name() == "sphere");
}

TEST_CASE("face tracing and the mirror pairing are inverse-conjugate") {
  for (const EmbeddingScheme& s :
       {k4_planar_scheme(), triangle_scheme({1, 1, -1}),
        EmbeddingScheme(bouquet(2), rotations_from_ids(*bouquet(2), {{"a.0", "b.0", "a.1", "b.1"}}),
                        {-1, 1})}) {
    for (Dart d = 0; d < s.graph().dart_count(); ++d) {
      for (int sign : {+1, -1}) {
        SignedDart sd = make_signed(d, sign);
        CHECK(s.mirror_step(s.mirror_step(sd)) == sd);
        // M * Phi * M = Phi^{-1}, i.e. Phi M Phi = M.
        CHECK(s.trace_step(s.mirror_step(s.trace_step(sd))) == s.mirror_step(sd));
      }
    }
  }
}

TEST_CASE("vertex flips preserve the embedding") {
  EmbeddingScheme s = k4_planar_scheme();
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
    EmbeddingScheme flipped = s.flip_vertex(v);
    CHECK(flipped.surface_id() == s.surface_id());
    CHECK(flipped.faces().size() == s.faces().size());
    CHECK(flipped.normalized().equivalent_up_to_mirror(s.normalized()));
  }
}

TEST_CASE("mirroring preserves the surface and normalizing restores positivity") {
  EmbeddingScheme s = k4_planar_scheme();
  CHECK(s.mirrored().surface_id() == s.surface_id());
  CHECK(s.equivalent_up_to_mirror(s.mirrored()));
  CHECK_FALSE(s.same_scheme(s.mirrored()));

  // Flipping one vertex of an all-positive scheme introduces negative signs;
  // normalization removes them again because the scheme is orientable.
  EmbeddingScheme flipped = s.flip_vertex(2);
  bool has_negative = false;
  for (Edge e = 0; e < s.graph().edge_count(); ++e) has_negative |= flipped.sign(e) < 0;
  CHECK(has_negative);
  EmbeddingScheme renormalized = flipped.normalized();
  for (Edge e = 0; e < s.graph().edge_count(); ++e) CHECK(renormalized.sign(e) == 1);
}

TEST_CASE("faces are reported deterministically from the smallest signed dart") {
  EmbeddingScheme s = k4_planar_scheme();
  auto a = s.faces();
  auto b = s.faces();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].darts == b[i].darts);
    CHECK(a[i].signs == b[i].signs);
  }
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].start() < a[i].start());
}

TEST_CASE("scheme construction rejects malformed rotations and signatures") {
  GraphPtr g = cycle_graph(3);
  std::vector<std::vector<Dart>> good;
  for (Vertex v = 0; v < g->vertex_count(); ++v) good.push_back(g->darts_at(v));

  CHECK_THROWS_AS(EmbeddingScheme(g, good, {1, 1}), Error);         // short signature
  CHECK_THROWS_AS(EmbeddingScheme(g, good, {1, 1, 0}), Error);      // zero sign
  auto dup = good;
  dup[0] = {0, 0};
  CHECK_THROWS_AS(EmbeddingScheme(g, dup, {1, 1, 1}), Error);       // duplicated dart
  auto wrong = good;
  std::swap(wrong[0], wrong[1]);
  CHECK_THROWS_AS(EmbeddingScheme(g, wrong, {1, 1, 1}), Error);     // darts at wrong vertex
  auto missing = good;
  missing[0].pop_back();
  CHECK_THROWS_AS(EmbeddingScheme(g, missing, {1, 1, 1}), Error);   // missing dart
}

TEST_CASE("rotations are reported starting from the smallest dart") {
  EmbeddingScheme s = k4_planar_scheme();
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
    auto rot = s.rotation_at(v);
    REQUIRE_FALSE(rot.empty());
    CHECK(rot.front() == *std::min_element(rot.begin(), rot.end()));
    // The reported order is the successor chain.
    for (std::size_t i = 0; i + 1 < rot.size(); ++i) CHECK(s.next_around(rot[i]) == rot[i + 1]);
    CHECK(s.next_around(rot.back()) == rot.front());
  }
}
