#pragma once

#include <vector>

#include "plancover/error.hpp"
#include "plancover/graph.hpp"

namespace plancover {

// A multigraph automorphism at dart level: a permutation of darts commuting
// with dart reversal and inducing a permutation of vertices.  The edge map
// is edge_of(dart_map[dart_of(e, 0)]).
struct GraphAutomorphism {
  std::vector<Vertex> vertex_map;
  std::vector<Dart> dart_map;

  Edge edge_image(Edge e) const { return edge_of(dart_map[dart_of(e, 0)]); }
  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

// All automorphisms, sorted by (vertex_map, dart_map).  Distinct dart maps
// over the same vertex map count separately (parallel-edge exchanges, loop
// reversals).  The budget is charged per backtracking node.
std::vector<GraphAutomorphism> automorphisms(const Graph& g, const Budget& budget = {});

GraphAutomorphism compose(const GraphAutomorphism& outer, const GraphAutomorphism& inner);
GraphAutomorphism identity_automorphism(const Graph& g);

}  // namespace plancover
