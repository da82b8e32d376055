#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plancover/automorphism.hpp"
#include "plancover/error.hpp"
#include "plancover/graph.hpp"

namespace plancover {

// A graph map f: total -> base given by a vertex map and a dart map that
// commutes with dart reversal and respects incidence.  Whether it is an
// actual (possibly branched) cover is decided afterwards by classify().
class CoverMap {
 public:
  CoverMap(GraphPtr total, GraphPtr base, std::vector<Vertex> vertex_map,
           std::vector<Dart> dart_map);

  const Graph& total() const { return *total_; }
  const Graph& base() const { return *base_; }
  const GraphPtr& total_ptr() const { return total_; }
  const GraphPtr& base_ptr() const { return base_; }

  Vertex vertex_image(Vertex v) const { return vertex_map_[v]; }
  Dart dart_image(Dart d) const { return dart_map_[d]; }
  Edge edge_image(Edge e) const { return edge_of(dart_map_[dart_of(e, 0)]); }

  const std::vector<Vertex>& vertex_map() const { return vertex_map_; }
  const std::vector<Dart>& dart_map() const { return dart_map_; }

  std::vector<Vertex> vertex_fiber(Vertex base_vertex) const;
  std::vector<Edge> edge_fiber(Edge base_edge) const;
  std::vector<Dart> dart_fiber(Dart base_dart) const;

  // Local degree at a total vertex: the uniform preimage count of the dart
  // map restricted to that vertex, or 0 when the restriction is not onto or
  // not uniform.
  std::uint32_t local_degree(Vertex total_vertex) const;

 private:
  GraphPtr total_;
  GraphPtr base_;
  std::vector<Vertex> vertex_map_;
  std::vector<Dart> dart_map_;
};

enum class CoverKind { kUnbranched, kBranched, kWeak, kInvalid };

std::string to_string(CoverKind kind);

struct CoverClass {
  CoverKind kind = CoverKind::kInvalid;
  std::uint32_t degree = 0;                    // defined for (un)branched covers
  std::vector<std::uint32_t> local_degrees;    // per total vertex; 0 = defective
  std::vector<Vertex> singular_vertices;       // local degree > 1
  std::vector<std::string> witnesses;          // why weak / invalid

  bool is_cover() const {
    return kind == CoverKind::kUnbranched || kind == CoverKind::kBranched;
  }
};

// Decides whether the map is an unbranched cover, a branched cover (every
// vertex locally exactly d-to-1 on darts), a weak cover (locally onto
// everywhere but not uniformly), or no cover at all.
CoverClass classify(const CoverMap& f);

// Symbolic builder: maps are given on vertex ids and dart ids of the total
// graph.  Rejects anything that is not reversal-equivariant and
// incidence-compatible.
CoverMap build_cover(GraphPtr total, GraphPtr base,
                     const std::vector<std::pair<std::string, std::string>>& vertex_assignments,
                     const std::vector<std::pair<std::string, std::string>>& dart_assignments);

struct DeckGroup {
  std::vector<GraphAutomorphism> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
};

// All isomorphisms j: a.total -> b.total over the common base, i.e. with
// b(j(x)) = a(x) on vertices and darts.  Both covers must share the same base
// graph.  Found by backtracking over dart images inside the matching fibers;
// the budget is charged per search node.
std::vector<GraphAutomorphism> cover_isomorphisms(const CoverMap& a, const CoverMap& b,
                                                  const Budget& budget = {});

// All automorphisms g of the total graph with f(g(x)) = f(x) on vertices and
// darts: cover_isomorphisms(f, f).
DeckGroup deck_group(const CoverMap& f, const Budget& budget = {});

// Regular means the deck group moves any fiber element to any other, on
// every vertex fiber and every edge fiber.
bool is_regular(const CoverMap& f, const DeckGroup& deck);

// g: K -> H followed by f: H -> G.  The middle graphs must agree
// structurally.
CoverMap compose_covers(const CoverMap& f, const CoverMap& g);

}  // namespace plancover
