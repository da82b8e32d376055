#include "plancover/voltage.hpp"

#include <algorithm>
#include <numeric>

namespace plancover {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i : images_) {
    if (i >= images_.size() || seen[i]) {
      throw Error(ErrorCode::kMalformed, "not a permutation");
    }
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) {
    throw Error(ErrorCode::kPrecondition, "composing permutations of different degrees");
  }
  std::vector<std::uint32_t> images(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) images[i] = other.images_[images_[i]];
  return Permutation(std::move(images));
}

std::vector<Permutation> symmetric_group(std::uint32_t n) {
  std::vector<std::uint32_t> line(n);
  std::iota(line.begin(), line.end(), 0u);
  std::vector<Permutation> group;
  do {
    group.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return group;
}

VoltageAssignment voltages_from_edges(const Graph& base, std::uint32_t fiber_size,
                                      const std::vector<Permutation>& edge_voltage) {
  if (edge_voltage.size() != base.edge_count()) {
    throw Error(ErrorCode::kMalformed, "need one voltage per edge");
  }
  VoltageAssignment alpha;
  alpha.fiber_size = fiber_size;
  alpha.dart_voltage.resize(base.dart_count());
  for (Edge e = 0; e < base.edge_count(); ++e) {
    if (edge_voltage[e].degree() != fiber_size) {
      throw Error(ErrorCode::kMalformed, "voltage on " + base.edge_id(e) + " has wrong degree");
    }
    alpha.dart_voltage[dart_of(e, 0)] = edge_voltage[e];
    alpha.dart_voltage[dart_of(e, 1)] = edge_voltage[e].inverse();
  }
  return alpha;
}

CoverMap voltage_cover(GraphPtr base, const VoltageAssignment& alpha) {
  const Graph& b = *base;
  const std::uint32_t n = alpha.fiber_size;
  if (n == 0) throw Error(ErrorCode::kMalformed, "voltage fiber must not be empty");
  if (alpha.dart_voltage.size() != b.dart_count()) {
    throw Error(ErrorCode::kMalformed, "need one voltage per dart");
  }
  for (Dart d = 0; d < b.dart_count(); ++d) {
    if (alpha.dart_voltage[d].degree() != n) {
      throw Error(ErrorCode::kMalformed, "voltage on dart " + b.dart_id(d) + " has wrong degree");
    }
    if (alpha.dart_voltage[reverse_dart(d)] != alpha.dart_voltage[d].inverse()) {
      throw Error(ErrorCode::kMalformed,
                  "voltages on dart " + b.dart_id(d) + " and its reverse are not inverse");
    }
  }

  std::vector<std::string> vertex_ids;
  vertex_ids.reserve(b.vertex_count() * n);
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    for (std::uint32_t i = 0; i < n; ++i) {
      vertex_ids.push_back(b.vertex_id(v) + "#" + std::to_string(i));
    }
  }
  std::vector<std::string> edge_ids;
  edge_ids.reserve(b.edge_count() * n);
  std::vector<std::pair<Vertex, Vertex>> endpoints;
  endpoints.reserve(static_cast<std::size_t>(b.edge_count()) * n);
  for (Edge e = 0; e < b.edge_count(); ++e) {
    auto [u, v] = b.edge_ends(e);
    const Permutation& p = alpha.dart_voltage[dart_of(e, 0)];
    for (std::uint32_t i = 0; i < n; ++i) {
      edge_ids.push_back(b.edge_id(e) + "#" + std::to_string(i));
      endpoints.emplace_back(u * n + i, v * n + p(i));
    }
  }
  auto total = std::make_shared<const Graph>(std::move(vertex_ids), std::move(edge_ids),
                                             std::move(endpoints));

  std::vector<Vertex> vertex_map(b.vertex_count() * n);
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    for (std::uint32_t i = 0; i < n; ++i) vertex_map[v * n + i] = v;
  }
  std::vector<Dart> dart_map(2u * b.edge_count() * n);
  for (Edge e = 0; e < b.edge_count(); ++e) {
    for (std::uint32_t i = 0; i < n; ++i) {
      Edge te = e * n + i;
      dart_map[dart_of(te, 0)] = dart_of(e, 0);
      dart_map[dart_of(te, 1)] = dart_of(e, 1);
    }
  }
  return CoverMap(std::move(total), std::move(base), std::move(vertex_map), std::move(dart_map));
}

std::vector<CoverMap> connected_double_covers(GraphPtr base, const Budget& budget) {
  const Graph& b = *base;
  if (!b.connected()) {
    throw Error(ErrorCode::kPrecondition, "double cover enumeration needs a connected base");
  }

  // Spanning tree via depth-first search; the cotree edges carry the free
  // sign choices.
  std::vector<bool> in_tree(b.edge_count(), false);
  std::vector<bool> seen(b.vertex_count(), false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : b.darts_at(v)) {
      Vertex w = b.other_endpoint(d);
      if (!seen[w]) {
        seen[w] = true;
        in_tree[edge_of(d)] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Edge> cotree;
  for (Edge e = 0; e < b.edge_count(); ++e) {
    if (!in_tree[e]) cotree.push_back(e);
  }
  if (cotree.size() >= 63) {
    throw Error(ErrorCode::kBudget, "too many cotree edges to enumerate double covers");
  }
  std::uint64_t count = (1ull << cotree.size()) - 1;
  budget.charge(count, "double cover enumeration");

  std::vector<CoverMap> covers;
  covers.reserve(count);
  Permutation id2 = Permutation::identity(2);
  Permutation swap2 = Permutation::transposition(2, 0, 1);
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    std::vector<Permutation> edge_voltage(b.edge_count(), id2);
    for (std::size_t i = 0; i < cotree.size(); ++i) {
      if (mask & (1ull << i)) edge_voltage[cotree[i]] = swap2;
    }
    CoverMap cover = voltage_cover(base, voltages_from_edges(b, 2, edge_voltage));
    if (!cover.total().connected()) {
      throw Error(ErrorCode::kInternal, "nonzero cotree signs must give a connected double cover");
    }
    covers.push_back(std::move(cover));
  }
  return covers;
}

}  // namespace plancover
