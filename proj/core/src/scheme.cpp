#include "plancover/scheme.hpp"

#include <algorithm>
#include <unordered_map>

#include "plancover/error.hpp"

namespace plancover {

std::string SurfaceId::name() const {
  if (orientable) {
    if (genus == 0) return "sphere";
    if (genus == 1) return "torus";
    return "genus-" + std::to_string(genus);
  }
  if (genus == 1) return "projective-plane";
  if (genus == 2) return "klein-bottle";
  return "crosscap-" + std::to_string(genus);
}

EmbeddingScheme::EmbeddingScheme(GraphPtr graph,
                                 const std::vector<std::vector<Dart>>& rotations,
                                 std::vector<std::int8_t> signature)
    : graph_(std::move(graph)), signature_(std::move(signature)) {
  if (!graph_) throw Error(ErrorCode::kPrecondition, "scheme requires a graph");
  const Graph& g = *graph_;
  if (rotations.size() != g.vertex_count()) {
    throw Error(ErrorCode::kMalformed, "rotation count does not match vertex count");
  }
  if (signature_.size() != g.edge_count()) {
    throw Error(ErrorCode::kMalformed, "signature length does not match edge count");
  }
  for (std::int8_t s : signature_) {
    if (s != 1 && s != -1) throw Error(ErrorCode::kMalformed, "edge sign must be +1 or -1");
  }
  next_.assign(g.dart_count(), kNoDart);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Dart> sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.darts_at(v)) {
      throw Error(ErrorCode::kMalformed,
                  "rotation at " + g.vertex_id(v) + " is not an order of its darts");
    }
    const auto& rot = rotations[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      next_[rot[i]] = rot[(i + 1) % rot.size()];
    }
  }
  rebuild_prev();
}

EmbeddingScheme::EmbeddingScheme(GraphPtr graph, std::vector<Dart> next,
                                 std::vector<std::int8_t> signature)
    : graph_(std::move(graph)), next_(std::move(next)), signature_(std::move(signature)) {
  rebuild_prev();
}

void EmbeddingScheme::rebuild_prev() {
  prev_.assign(next_.size(), kNoDart);
  for (Dart d = 0; d < next_.size(); ++d) prev_[next_[d]] = d;
}

std::vector<Dart> EmbeddingScheme::rotation_at(Vertex v) const {
  const auto& darts = graph_->darts_at(v);
  std::vector<Dart> rot;
  rot.reserve(darts.size());
  if (darts.empty()) return rot;
  Dart d = darts.front();
  do {
    rot.push_back(d);
    d = next_[d];
  } while (d != darts.front());
  return rot;
}

SignedDart EmbeddingScheme::trace_step(SignedDart sd) const {
  Dart d = dart_part(sd);
  int s = sign_part(sd) * signature_[edge_of(d)];
  Dart rev = reverse_dart(d);
  return make_signed(s > 0 ? next_[rev] : prev_[rev], s);
}

SignedDart EmbeddingScheme::mirror_step(SignedDart sd) const {
  Dart d = dart_part(sd);
  int s = sign_part(sd) * signature_[edge_of(d)];
  return make_signed(reverse_dart(d), -s);
}

std::vector<FaceWalk> EmbeddingScheme::faces() const {
  const std::uint32_t n_signed = 2 * graph_->dart_count();
  if (n_signed == 0) throw Error(ErrorCode::kPrecondition, "face tracing needs at least one edge");

  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> orbit_of(n_signed, kUnvisited);
  std::vector<std::vector<SignedDart>> orbits;
  for (SignedDart sd = 0; sd < n_signed; ++sd) {
    if (orbit_of[sd] != kUnvisited) continue;
    std::vector<SignedDart> orbit;
    SignedDart cur = sd;
    do {
      orbit_of[cur] = static_cast<std::uint32_t>(orbits.size());
      orbit.push_back(cur);
      cur = trace_step(cur);
    } while (cur != sd);
    orbits.push_back(std::move(orbit));
  }

  auto positive_pure = [](const std::vector<SignedDart>& orbit) {
    for (SignedDart sd : orbit) {
      if (sign_part(sd) < 0) return false;
    }
    return true;
  };

  std::vector<FaceWalk> walks;
  walks.reserve(orbits.size() / 2);
  for (std::uint32_t i = 0; i < orbits.size(); ++i) {
    std::uint32_t mirror = orbit_of[mirror_step(orbits[i].front())];
    if (mirror == i) {
      throw Error(ErrorCode::kInternal, "face orbit is its own mirror image");
    }
    if (mirror < i) continue;  // visit each mirror pair once
    // Prefer the all-positive side of a pair (the counterclockwise walk of
    // an oriented scheme); otherwise the side holding the smaller dart.
    std::uint32_t keep = i;
    if (!positive_pure(orbits[i]) && positive_pure(orbits[mirror])) keep = mirror;
    const auto& orbit = orbits[keep];
    std::size_t min_pos =
        std::min_element(orbit.begin(), orbit.end()) - orbit.begin();
    FaceWalk walk;
    walk.darts.reserve(orbit.size());
    walk.signs.reserve(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      SignedDart cur = orbit[(min_pos + k) % orbit.size()];
      walk.darts.push_back(dart_part(cur));
      walk.signs.push_back(static_cast<std::int8_t>(sign_part(cur)));
    }
    walks.push_back(std::move(walk));
  }
  std::sort(walks.begin(), walks.end(),
            [](const FaceWalk& a, const FaceWalk& b) { return a.start() < b.start(); });
  return walks;
}

int EmbeddingScheme::euler_characteristic() const {
  const Graph& g = *graph_;
  if (g.edge_count() == 0) {
    if (g.vertex_count() == 1) return 2;  // lone vertex on the sphere
    throw Error(ErrorCode::kPrecondition, "Euler characteristic needs a connected scheme");
  }
  return static_cast<int>(g.vertex_count()) - static_cast<int>(g.edge_count()) +
         static_cast<int>(faces().size());
}

bool EmbeddingScheme::orientable() const {
  const Graph& g = *graph_;
  std::vector<std::int8_t> eta(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (eta[root] != 0) continue;
    eta[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        Vertex w = g.other_endpoint(d);
        if (eta[w] == 0) {
          eta[w] = static_cast<std::int8_t>(eta[v] * signature_[edge_of(d)]);
          stack.push_back(w);
        }
      }
    }
  }
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (signature_[e] != eta[u] * eta[v]) return false;
  }
  return true;
}

SurfaceId EmbeddingScheme::surface_id() const {
  if (!graph_->connected()) {
    throw Error(ErrorCode::kPrecondition, "surface naming needs a connected graph");
  }
  SurfaceId id;
  id.orientable = orientable();
  int chi = euler_characteristic();
  if (id.orientable) {
    if (chi % 2 != 0 || chi > 2) {
      throw Error(ErrorCode::kInternal, "orientable scheme with impossible Euler characteristic");
    }
    id.genus = (2 - chi) / 2;
  } else {
    if (chi > 1) {
      throw Error(ErrorCode::kInternal,
                  "non-orientable scheme with impossible Euler characteristic");
    }
    id.genus = 2 - chi;
  }
  return id;
}

EmbeddingScheme EmbeddingScheme::flip_vertex(Vertex v) const {
  const Graph& g = *graph_;
  if (v >= g.vertex_count()) throw Error(ErrorCode::kPrecondition, "flip vertex out of range");
  std::vector<Dart> next = next_;
  std::vector<std::int8_t> signature = signature_;
  for (Dart d : g.darts_at(v)) {
    next[d] = prev_[d];
    Edge e = edge_of(d);
    if (!g.is_loop(e)) signature[e] = static_cast<std::int8_t>(-signature[e]);
  }
  return EmbeddingScheme(graph_, std::move(next), std::move(signature));
}

EmbeddingScheme EmbeddingScheme::normalized() const {
  const Graph& g = *graph_;
  std::vector<std::int8_t> eta(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (eta[root] != 0) continue;
    eta[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_at(v)) {
        Vertex w = g.other_endpoint(d);
        if (eta[w] == 0) {
          eta[w] = static_cast<std::int8_t>(eta[v] * signature_[edge_of(d)]);
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Dart> next(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d) {
    next[d] = eta[g.endpoint(d)] > 0 ? next_[d] : prev_[d];
  }
  std::vector<std::int8_t> signature(g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    signature[e] = static_cast<std::int8_t>(signature_[e] * eta[u] * eta[v]);
  }
  return EmbeddingScheme(graph_, std::move(next), std::move(signature));
}

EmbeddingScheme EmbeddingScheme::mirrored() const {
  return EmbeddingScheme(graph_, prev_, signature_);
}

bool EmbeddingScheme::same_scheme(const EmbeddingScheme& other) const {
  return graph_->same_structure(*other.graph_) && next_ == other.next_ &&
         signature_ == other.signature_;
}

bool EmbeddingScheme::equivalent_up_to_mirror(const EmbeddingScheme& other) const {
  return same_scheme(other) || same_scheme(other.mirrored());
}

EmbeddingScheme default_scheme(GraphPtr graph) {
  const Graph& g = *graph;
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rotations.push_back(g.darts_at(v));
  std::vector<std::int8_t> signature(g.edge_count(), 1);
  return EmbeddingScheme(std::move(graph), rotations, std::move(signature));
}

std::vector<std::vector<Dart>> rotations_from_ids(
    const Graph& graph, const std::vector<std::vector<std::string>>& dart_ids_per_vertex) {
  std::unordered_map<std::string, Edge> edge_index;
  for (Edge e = 0; e < graph.edge_count(); ++e) edge_index.emplace(graph.edge_id(e), e);
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(dart_ids_per_vertex.size());
  for (const auto& ids : dart_ids_per_vertex) {
    std::vector<Dart> rot;
    rot.reserve(ids.size());
    for (const std::string& id : ids) {
      auto dot = id.rfind('.');
      if (dot == std::string::npos || dot + 2 != id.size() ||
          (id[dot + 1] != '0' && id[dot + 1] != '1')) {
        throw Error(ErrorCode::kMalformed, "dart id must look like <edge>.<0|1>: " + id);
      }
      auto it = edge_index.find(id.substr(0, dot));
      if (it == edge_index.end()) {
        throw Error(ErrorCode::kMalformed, "dart references unknown edge: " + id);
      }
      rot.push_back(dart_of(it->second, id[dot + 1] - '0'));
    }
    rotations.push_back(std::move(rot));
  }
  return rotations;
}

}  // namespace plancover
