#pragma once

#include <string>

#include "plancover/graph.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

// Graphviz text for a graph: one node per vertex, one undirected edge per
// edge labeled with its id.  Output order follows construction order, so the
// text is deterministic.
std::string graph_to_dot(const Graph& g);

// Graphviz text for a scheme: the underlying graph with each vertex's
// rotation attached as a tooltip (and a comment), negative edges drawn
// dashed.  Deterministic for the same reason.
std::string scheme_to_dot(const EmbeddingScheme& s);

}  // namespace plancover
