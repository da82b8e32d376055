#include "plancover/planarity.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "plancover/error.hpp"

namespace plancover {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, std::size_t>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<EmbeddingScheme> planar_embed(GraphPtr graph) {
  const Graph& g = *graph;
  if (!g.connected()) {
    throw Error(ErrorCode::kPrecondition, "planar embedding needs a connected graph");
  }

  // Group edges: loops per vertex, parallels per unordered endpoint pair.
  std::vector<std::vector<Edge>> loops_at(g.vertex_count());
  std::map<std::pair<Vertex, Vertex>, std::vector<Edge>> parallel_class;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (u == v) {
      loops_at[u].push_back(e);
    } else {
      if (u > v) std::swap(u, v);
      parallel_class[{u, v}].push_back(e);
    }
  }

  BoostGraph bg(g.vertex_count());
  std::vector<const std::vector<Edge>*> class_of;  // by simple-edge index
  for (const auto& [ends, edges] : parallel_class) {
    boost::add_edge(ends.first, ends.second, class_of.size(), bg);
    class_of.push_back(&edges);
  }

  std::vector<std::vector<BoostEdge>> embedding(g.vertex_count());
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) return std::nullopt;

  auto edge_index = boost::get(boost::edge_index, bg);
  std::vector<std::vector<Dart>> rotations(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& rot = rotations[v];
    for (const BoostEdge& be : embedding[v]) {
      const std::vector<Edge>& edges = *class_of[edge_index[be]];
      // All parallels sit where their class sits, nested: ascending on the
      // smaller endpoint, descending on the larger one.
      auto [lo, hi] = g.edge_ends(edges.front());
      if (lo > hi) std::swap(lo, hi);
      if (v == lo) {
        for (Edge e : edges) rot.push_back(g.endpoint(dart_of(e, 0)) == v ? dart_of(e, 0) : dart_of(e, 1));
      } else {
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
          rot.push_back(g.endpoint(dart_of(*it, 0)) == v ? dart_of(*it, 0) : dart_of(*it, 1));
        }
      }
    }
    // Loops become monogons: both darts adjacent.
    for (Edge e : loops_at[v]) {
      rot.push_back(dart_of(e, 0));
      rot.push_back(dart_of(e, 1));
    }
  }

  EmbeddingScheme scheme(std::move(graph), rotations,
                         std::vector<std::int8_t>(g.edge_count(), 1));
  if (scheme.euler_characteristic() != 2) {
    throw Error(ErrorCode::kInternal, "planarity kernel produced a non-sphere scheme");
  }
  return scheme;
}

}  // namespace plancover
