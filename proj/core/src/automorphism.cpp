#include "plancover/automorphism.hpp"

#include <algorithm>
#include <map>

namespace plancover {

namespace {

struct AutoSearch {
  const Graph& g;
  const Budget& budget;
  std::uint64_t nodes = 0;

  std::map<std::pair<Vertex, Vertex>, std::vector<Edge>> classes;  // u < v
  std::vector<std::vector<Edge>> loops_at;
  std::vector<Vertex> vmap;
  std::vector<bool> used;
  std::vector<GraphAutomorphism> found;

  explicit AutoSearch(const Graph& graph, const Budget& b)
      : g(graph), budget(b), loops_at(graph.vertex_count()),
        vmap(graph.vertex_count(), kNoVertex), used(graph.vertex_count(), false) {
    for (Edge e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge_ends(e);
      if (u == v) {
        loops_at[u].push_back(e);
      } else {
        if (u > v) std::swap(u, v);
        classes[{u, v}].push_back(e);
      }
    }
  }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = classes.find({u, v});
    return it == classes.end() ? 0 : it->second.size();
  }

  bool compatible(Vertex v, Vertex w) const {
    if (g.degree(v) != g.degree(w)) return false;
    if (loops_at[v].size() != loops_at[w].size()) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (vmap[u] != kNoVertex && multiplicity(u, v) != multiplicity(vmap[u], w)) return false;
    }
    return true;
  }

  void assign_vertices(Vertex v) {
    budget.charge(++nodes, "automorphism search");
    if (v == g.vertex_count()) {
      GraphAutomorphism a;
      a.vertex_map = vmap;
      a.dart_map.assign(g.dart_count(), kNoDart);
      expand_darts(a, classes.begin());
      return;
    }
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (used[w] || !compatible(v, w)) continue;
      vmap[v] = w;
      used[w] = true;
      assign_vertices(v + 1);
      vmap[v] = kNoVertex;
      used[w] = false;
    }
  }

  using ClassIter = std::map<std::pair<Vertex, Vertex>, std::vector<Edge>>::const_iterator;

  void expand_darts(GraphAutomorphism& a, ClassIter it) {
    budget.charge(++nodes, "automorphism search");
    if (it == classes.end()) {
      expand_loops(a, 0);
      return;
    }
    auto [u, v] = it->first;
    Vertex iu = vmap[u], iv = vmap[v];
    const std::vector<Edge>& src = it->second;
    std::vector<Edge> dst = classes.at({std::min(iu, iv), std::max(iu, iv)});
    std::sort(dst.begin(), dst.end());
    do {
      for (std::size_t k = 0; k < src.size(); ++k) {
        Dart su = g.endpoint(dart_of(src[k], 0)) == u ? dart_of(src[k], 0) : dart_of(src[k], 1);
        Dart du = g.endpoint(dart_of(dst[k], 0)) == iu ? dart_of(dst[k], 0) : dart_of(dst[k], 1);
        a.dart_map[su] = du;
        a.dart_map[reverse_dart(su)] = reverse_dart(du);
      }
      expand_darts(a, std::next(it));
    } while (std::next_permutation(dst.begin(), dst.end()));
  }

  void expand_loops(GraphAutomorphism& a, Vertex v) {
    budget.charge(++nodes, "automorphism search");
    while (v < g.vertex_count() && loops_at[v].empty()) ++v;
    if (v == g.vertex_count()) {
      found.push_back(a);
      return;
    }
    const std::vector<Edge>& src = loops_at[v];
    std::vector<Edge> dst = loops_at[vmap[v]];
    std::sort(dst.begin(), dst.end());
    do {
      for (std::uint32_t bits = 0; bits < (1u << src.size()); ++bits) {
        for (std::size_t k = 0; k < src.size(); ++k) {
          bool swap_ends = (bits >> k) & 1u;
          a.dart_map[dart_of(src[k], 0)] = dart_of(dst[k], swap_ends ? 1 : 0);
          a.dart_map[dart_of(src[k], 1)] = dart_of(dst[k], swap_ends ? 0 : 1);
        }
        expand_loops(a, v + 1);
      }
    } while (std::next_permutation(dst.begin(), dst.end()));
  }
};

}  // namespace

std::vector<GraphAutomorphism> automorphisms(const Graph& g, const Budget& budget) {
  AutoSearch search(g, budget);
  search.assign_vertices(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const GraphAutomorphism& a, const GraphAutomorphism& b) {
              return std::tie(a.vertex_map, a.dart_map) < std::tie(b.vertex_map, b.dart_map);
            });
  return search.found;
}

GraphAutomorphism compose(const GraphAutomorphism& outer, const GraphAutomorphism& inner) {
  GraphAutomorphism out;
  out.vertex_map.resize(inner.vertex_map.size());
  out.dart_map.resize(inner.dart_map.size());
  for (std::size_t v = 0; v < inner.vertex_map.size(); ++v) {
    out.vertex_map[v] = outer.vertex_map[inner.vertex_map[v]];
  }
  for (std::size_t d = 0; d < inner.dart_map.size(); ++d) {
    out.dart_map[d] = outer.dart_map[inner.dart_map[d]];
  }
  return out;
}

GraphAutomorphism identity_automorphism(const Graph& g) {
  GraphAutomorphism a;
  a.vertex_map.resize(g.vertex_count());
  a.dart_map.resize(g.dart_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) a.vertex_map[v] = v;
  for (Dart d = 0; d < g.dart_count(); ++d) a.dart_map[d] = d;
  return a;
}

}  // namespace plancover
