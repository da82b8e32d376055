#include "plancover/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "plancover/error.hpp"

namespace plancover {

Graph::Graph(std::vector<std::string> vertex_ids,
             std::vector<std::string> edge_ids,
             std::vector<std::pair<Vertex, Vertex>> endpoints)
    : vertex_ids_(std::move(vertex_ids)), edge_ids_(std::move(edge_ids)) {
  if (edge_ids_.size() != endpoints.size()) {
    throw Error(ErrorCode::kInternal, "edge id/endpoint count mismatch");
  }
  dart_endpoint_.resize(2 * endpoints.size());
  darts_at_.resize(vertex_ids_.size());
  for (Edge e = 0; e < endpoints.size(); ++e) {
    auto [u, v] = endpoints[e];
    if (u >= vertex_ids_.size() || v >= vertex_ids_.size()) {
      throw Error(ErrorCode::kInternal, "edge endpoint out of range");
    }
    dart_endpoint_[dart_of(e, 0)] = u;
    dart_endpoint_[dart_of(e, 1)] = v;
    darts_at_[u].push_back(dart_of(e, 0));
    darts_at_[v].push_back(dart_of(e, 1));
  }
  for (auto& darts : darts_at_) std::sort(darts.begin(), darts.end());
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : darts_at_[v]) {
      Vertex w = other_endpoint(d);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

bool Graph::same_structure(const Graph& other) const {
  return vertex_count() == other.vertex_count() && dart_endpoint_ == other.dart_endpoint_;
}

Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<std::pair<std::string, std::string>>& edge_endpoints,
                  const std::vector<std::string>& edge_ids) {
  std::unordered_map<std::string, Vertex> index;
  index.reserve(vertex_ids.size());
  for (Vertex v = 0; v < vertex_ids.size(); ++v) {
    if (!index.emplace(vertex_ids[v], v).second) {
      throw Error(ErrorCode::kMalformed, "duplicate vertex id: " + vertex_ids[v]);
    }
  }
  if (!edge_ids.empty() && edge_ids.size() != edge_endpoints.size()) {
    throw Error(ErrorCode::kMalformed, "edge id count does not match edge count");
  }
  std::vector<std::string> eids = edge_ids;
  if (eids.empty()) {
    eids.reserve(edge_endpoints.size());
    for (std::size_t e = 0; e < edge_endpoints.size(); ++e) eids.push_back("e" + std::to_string(e));
  }
  std::unordered_set<std::string> eid_seen;
  for (const auto& id : eids) {
    if (!eid_seen.insert(id).second) {
      throw Error(ErrorCode::kMalformed, "duplicate edge id: " + id);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> endpoints;
  endpoints.reserve(edge_endpoints.size());
  for (const auto& [uid, vid] : edge_endpoints) {
    auto ui = index.find(uid);
    auto vi = index.find(vid);
    if (ui == index.end()) throw Error(ErrorCode::kMalformed, "edge endpoint not declared: " + uid);
    if (vi == index.end()) throw Error(ErrorCode::kMalformed, "edge endpoint not declared: " + vid);
    endpoints.emplace_back(ui->second, vi->second);
  }
  return Graph(vertex_ids, std::move(eids), std::move(endpoints));
}

AssumptionsReport validate_assumptions(const Graph& g) {
  AssumptionsReport report;
  report.connected = g.connected();
  std::map<std::pair<Vertex, Vertex>, Edge> first_seen;
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) {
      report.loops.push_back(e);
      continue;
    }
    auto [u, v] = g.edge_ends(e);
    if (u > v) std::swap(u, v);
    auto [it, inserted] = first_seen.emplace(std::make_pair(u, v), e);
    if (!inserted) report.parallels.emplace_back(it->second, e);
  }
  return report;
}

Graph relabel(const Graph& g, std::span<const Vertex> vertex_perm,
              std::span<const Edge> edge_perm, std::span<const bool> flip_ends) {
  if (vertex_perm.size() != g.vertex_count() || edge_perm.size() != g.edge_count() ||
      flip_ends.size() != g.edge_count()) {
    throw Error(ErrorCode::kPrecondition, "relabel permutation size mismatch");
  }
  std::vector<std::string> vids(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) vids[vertex_perm[v]] = g.vertex_id(v);
  std::vector<std::string> eids(g.edge_count());
  std::vector<std::pair<Vertex, Vertex>> endpoints(g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (flip_ends[e]) std::swap(u, v);
    eids[edge_perm[e]] = g.edge_id(e);
    endpoints[edge_perm[e]] = {vertex_perm[u], vertex_perm[v]};
  }
  return Graph(std::move(vids), std::move(eids), std::move(endpoints));
}

}  // namespace plancover
