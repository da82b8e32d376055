#include "plancover/enumerate.hpp"

#include <algorithm>

namespace plancover {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  constexpr std::uint64_t kMax = static_cast<std::uint64_t>(-1);
  if (a > kMax / b) return kMax;
  return a * b;
}

std::uint64_t factorial_saturating(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out = saturating_mul(out, k);
  return out;
}

// Edges outside a DFS spanning forest, ascending.  Loops are always cotree.
std::vector<Edge> cotree_edges(const Graph& g) {
  std::vector<bool> in_tree(g.edge_count(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        Vertex w = g.other_endpoint(d);
        if (!seen[w]) {
          seen[w] = true;
          in_tree[edge_of(d)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Edge> cotree;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e]) cotree.push_back(e);
  }
  return cotree;
}

}  // namespace

std::uint64_t count_rotation_systems(const Graph& graph, bool vary_signature) {
  std::uint64_t total = 1;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::uint32_t deg = graph.degree(v);
    if (deg > 1) total = saturating_mul(total, factorial_saturating(deg - 1));
  }
  if (vary_signature) {
    std::size_t free_signs = cotree_edges(graph).size();
    for (std::size_t i = 0; i < free_signs; ++i) total = saturating_mul(total, 2);
  }
  return total;
}

std::uint64_t enumerate_rotation_systems(
    GraphPtr graph, const SchemeEnumOptions& opts,
    const std::function<bool(const EmbeddingScheme&)>& visit) {
  const Graph& g = *graph;
  opts.budget.charge(count_rotation_systems(g, opts.vary_signature), "scheme enumeration");

  // Per-vertex state: fixed head dart plus the permuted tail.
  std::vector<std::vector<Dart>> tails(g.vertex_count());
  std::vector<std::vector<Dart>> rotations(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& darts = g.darts_at(v);
    if (!darts.empty()) tails[v].assign(darts.begin() + 1, darts.end());
  }
  std::vector<Edge> free_edges =
      opts.vary_signature ? cotree_edges(g) : std::vector<Edge>{};

  std::uint64_t visited = 0;
  bool more_rotations = true;
  while (more_rotations) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      rotations[v].clear();
      if (!g.darts_at(v).empty()) {
        rotations[v].push_back(g.darts_at(v).front());
        rotations[v].insert(rotations[v].end(), tails[v].begin(), tails[v].end());
      }
    }
    std::vector<std::int8_t> signature(g.edge_count(), 1);
    bool more_signs = true;
    while (more_signs) {
      ++visited;
      if (!visit(EmbeddingScheme(graph, rotations, signature))) return visited;
      // Advance the signature odometer: +1 before -1 per free edge.
      more_signs = false;
      for (std::size_t i = free_edges.size(); i-- > 0;) {
        if (signature[free_edges[i]] == 1) {
          signature[free_edges[i]] = -1;
          more_signs = true;
          break;
        }
        signature[free_edges[i]] = 1;
      }
    }
    // Advance the rotation odometer, last vertex fastest.
    more_rotations = false;
    for (Vertex v = g.vertex_count(); v-- > 0;) {
      if (std::next_permutation(tails[v].begin(), tails[v].end())) {
        more_rotations = true;
        break;
      }
    }
  }
  return visited;
}

}  // namespace plancover
