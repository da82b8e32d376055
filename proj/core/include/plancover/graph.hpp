#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plancover/ids.hpp"

namespace plancover {

// A finite multigraph in dart form.  Each edge contributes two darts related
// by reverse_dart; a dart knows the vertex it is attached to.  Loops and
// parallel edges are representable; validate_assumptions reports them.
//
// Vertices and edges carry string ids for interchange and witnesses; all
// algorithms work on the dense indices.
class Graph {
 public:
  Graph() = default;

  // endpoints[e] = (u, v) attaches dart 2e to u and dart 2e+1 to v.
  Graph(std::vector<std::string> vertex_ids,
        std::vector<std::string> edge_ids,
        std::vector<std::pair<Vertex, Vertex>> endpoints);

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(vertex_ids_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edge_ids_.size()); }
  std::uint32_t dart_count() const { return 2 * edge_count(); }

  Vertex endpoint(Dart d) const { return dart_endpoint_[d]; }
  Vertex other_endpoint(Dart d) const { return dart_endpoint_[reverse_dart(d)]; }
  std::pair<Vertex, Vertex> edge_ends(Edge e) const {
    return {dart_endpoint_[dart_of(e, 0)], dart_endpoint_[dart_of(e, 1)]};
  }
  bool is_loop(Edge e) const {
    return dart_endpoint_[dart_of(e, 0)] == dart_endpoint_[dart_of(e, 1)];
  }

  // Darts attached to v, ascending.
  const std::vector<Dart>& darts_at(Vertex v) const { return darts_at_[v]; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(darts_at_[v].size()); }

  const std::string& vertex_id(Vertex v) const { return vertex_ids_[v]; }
  const std::string& edge_id(Edge e) const { return edge_ids_[e]; }
  std::string dart_id(Dart d) const { return edge_ids_[edge_of(d)] + "." + (end_of(d) ? "1" : "0"); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  bool connected() const;

  // Structural equality on indices; ids are ignored.
  bool same_structure(const Graph& other) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Vertex> dart_endpoint_;       // size 2E
  std::vector<std::vector<Dart>> darts_at_; // size V
};

using GraphPtr = std::shared_ptr<const Graph>;

// Builds a graph from symbolic ids.  Rejects duplicate vertex or edge ids and
// edges whose endpoints were not declared.  Edge ids default to "e<k>".
Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<std::pair<std::string, std::string>>& edge_endpoints,
                  const std::vector<std::string>& edge_ids = {});

// Assumptions report: connected, loop-free, no parallel edges.
struct AssumptionsReport {
  bool connected = false;
  std::vector<Edge> loops;                       // 1-cycles
  std::vector<std::pair<Edge, Edge>> parallels;  // representative 2-cycles
  bool pass() const { return connected && loops.empty() && parallels.empty(); }
};

AssumptionsReport validate_assumptions(const Graph& g);

// Isomorphic copy with permuted indices: vertex v becomes vertex_perm[v],
// edge e becomes edge_perm[e], and the two darts of e swap iff flip_ends[e].
// Used by relabeling-invariance tests.
Graph relabel(const Graph& g, std::span<const Vertex> vertex_perm,
              std::span<const Edge> edge_perm, std::span<const bool> flip_ends);

}  // namespace plancover
