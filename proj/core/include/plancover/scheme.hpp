#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plancover/graph.hpp"
#include "plancover/ids.hpp"

namespace plancover {

// Signed darts drive face tracing.  A signed dart is (d, s) with s = +1/-1,
// packed as (d << 1) | (s < 0).
using SignedDart = std::uint32_t;

constexpr SignedDart make_signed(Dart d, int s) {
  return (d << 1) | static_cast<SignedDart>(s < 0);
}
constexpr Dart dart_part(SignedDart sd) { return sd >> 1; }
constexpr int sign_part(SignedDart sd) { return (sd & 1u) ? -1 : +1; }

// Name of a closed surface, recovered from Euler characteristic and
// orientability.
struct SurfaceId {
  bool orientable = true;
  int genus = 0;  // handles if orientable, crosscaps otherwise

  int euler() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  std::string name() const;

  friend bool operator==(const SurfaceId&, const SurfaceId&) = default;
};

// One face boundary walk: the orbit of the trace step starting at its
// smallest signed dart.  darts[i]/signs[i] is the i-th signed dart visited.
struct FaceWalk {
  std::vector<Dart> darts;
  std::vector<std::int8_t> signs;

  std::size_t length() const { return darts.size(); }
  SignedDart start() const { return make_signed(darts.front(), signs.front()); }
};

// An embedding scheme: a rotation at every vertex (cyclic order of the darts
// attached to it) plus a sign per edge.  Schemes encode cellular embeddings
// of the graph into closed surfaces; equal schemes mean equal embeddings.
class EmbeddingScheme {
 public:
  // rotations[v] lists darts_at(v) in cyclic order; signature[e] is +1/-1.
  EmbeddingScheme(GraphPtr graph, const std::vector<std::vector<Dart>>& rotations,
                  std::vector<std::int8_t> signature);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  Dart next_around(Dart d) const { return next_[d]; }
  Dart prev_around(Dart d) const { return prev_[d]; }
  int sign(Edge e) const { return signature_[e]; }
  const std::vector<std::int8_t>& signature() const { return signature_; }

  // Rotation at v as a sequence starting from the smallest dart.
  std::vector<Dart> rotation_at(Vertex v) const;

  // One step of the face trace from (d, s): cross the edge, flipping the
  // side when the edge sign is negative, then turn by the rotation (forward
  // on side +1, backward on side -1).
  SignedDart trace_step(SignedDart sd) const;

  // The side-swap pairing between a face orbit and its mirror image.
  SignedDart mirror_step(SignedDart sd) const;

  // All face boundary walks, one per mirror pair of trace orbits, sorted by
  // smallest signed dart.  F = walks.size().
  std::vector<FaceWalk> faces() const;

  int euler_characteristic() const;

  // True when every cycle has positive sign product; the embedded surface is
  // then orientable.
  bool orientable() const;

  SurfaceId surface_id() const;

  // Reverses the rotation at v and toggles the sign of every non-loop edge
  // at v.  The embedded surface is unchanged.
  EmbeddingScheme flip_vertex(Vertex v) const;

  // Flips a set of vertices so that a spanning tree carries all-positive
  // signs; when the scheme is orientable the result is all-positive.
  EmbeddingScheme normalized() const;

  // Reverses every rotation, keeping signs.  Same surface, mirrored.
  EmbeddingScheme mirrored() const;

  // Identical rotation and signature on the same graph structure.
  bool same_scheme(const EmbeddingScheme& other) const;

  // Equal as embeddings up to a global mirror.
  bool equivalent_up_to_mirror(const EmbeddingScheme& other) const;

 private:
  EmbeddingScheme(GraphPtr graph, std::vector<Dart> next, std::vector<std::int8_t> signature);

  void rebuild_prev();

  GraphPtr graph_;
  std::vector<Dart> next_;  // rotation successor per dart
  std::vector<Dart> prev_;  // rotation predecessor per dart
  std::vector<std::int8_t> signature_;
};

// Convenience: all-positive scheme with each rotation in ascending dart
// order.  Mostly useful for tests and generators.
EmbeddingScheme default_scheme(GraphPtr graph);

// Scheme from per-vertex vertex-neighbour order is ambiguous for
// multigraphs, so builders always speak darts.  This helper turns edge-id
// based rotations (pairs of edge id and end) into the dart form.
std::vector<std::vector<Dart>> rotations_from_ids(
    const Graph& graph, const std::vector<std::vector<std::string>>& dart_ids_per_vertex);

}  // namespace plancover
