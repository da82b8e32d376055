#pragma once

#include <optional>

#include "plancover/scheme.hpp"

namespace plancover {

// Sphere scheme for a connected planar multigraph, or nothing when the graph
// is non-planar.  Loops and parallel edges are stripped for the planarity
// kernel and re-inserted afterwards (loop darts adjacent in the rotation,
// parallel edges nested), which never changes planarity.  The result is
// all-positive and is checked to have Euler characteristic 2.
std::optional<EmbeddingScheme> planar_embed(GraphPtr graph);

}  // namespace plancover
