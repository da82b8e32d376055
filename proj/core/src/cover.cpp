#include "plancover/cover.hpp"

#include <algorithm>
#include <unordered_map>

namespace plancover {

CoverMap::CoverMap(GraphPtr total, GraphPtr base, std::vector<Vertex> vertex_map,
                   std::vector<Dart> dart_map)
    : total_(std::move(total)), base_(std::move(base)), vertex_map_(std::move(vertex_map)),
      dart_map_(std::move(dart_map)) {
  const Graph& t = *total_;
  const Graph& b = *base_;
  if (vertex_map_.size() != t.vertex_count()) {
    throw Error(ErrorCode::kMalformed, "cover vertex map size mismatch");
  }
  if (dart_map_.size() != t.dart_count()) {
    throw Error(ErrorCode::kMalformed, "cover dart map size mismatch");
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (vertex_map_[v] >= b.vertex_count()) {
      throw Error(ErrorCode::kMalformed, "cover maps vertex " + t.vertex_id(v) + " out of range");
    }
  }
  for (Dart d = 0; d < t.dart_count(); ++d) {
    if (dart_map_[d] >= b.dart_count()) {
      throw Error(ErrorCode::kMalformed, "cover maps dart " + t.dart_id(d) + " out of range");
    }
    if (dart_map_[reverse_dart(d)] != reverse_dart(dart_map_[d])) {
      throw Error(ErrorCode::kMalformed,
                  "cover dart map does not commute with reversal at " + t.dart_id(d));
    }
    if (b.endpoint(dart_map_[d]) != vertex_map_[t.endpoint(d)]) {
      throw Error(ErrorCode::kMalformed,
                  "cover dart map breaks incidence at " + t.dart_id(d));
    }
  }
}

std::vector<Vertex> CoverMap::vertex_fiber(Vertex base_vertex) const {
  std::vector<Vertex> fiber;
  for (Vertex v = 0; v < total_->vertex_count(); ++v) {
    if (vertex_map_[v] == base_vertex) fiber.push_back(v);
  }
  return fiber;
}

std::vector<Edge> CoverMap::edge_fiber(Edge base_edge) const {
  std::vector<Edge> fiber;
  for (Edge e = 0; e < total_->edge_count(); ++e) {
    if (edge_image(e) == base_edge) fiber.push_back(e);
  }
  return fiber;
}

std::vector<Dart> CoverMap::dart_fiber(Dart base_dart) const {
  std::vector<Dart> fiber;
  for (Dart d = 0; d < total_->dart_count(); ++d) {
    if (dart_map_[d] == base_dart) fiber.push_back(d);
  }
  return fiber;
}

std::uint32_t CoverMap::local_degree(Vertex total_vertex) const {
  Vertex v = vertex_map_[total_vertex];
  const auto& base_darts = base_->darts_at(v);
  if (base_darts.empty()) return 0;
  std::unordered_map<Dart, std::uint32_t> counts;
  for (Dart d : total_->darts_at(total_vertex)) ++counts[dart_map_[d]];
  std::uint32_t d0 = counts.count(base_darts.front()) ? counts[base_darts.front()] : 0;
  for (Dart bd : base_darts) {
    std::uint32_t c = counts.count(bd) ? counts[bd] : 0;
    if (c != d0) return 0;
  }
  return d0;
}

std::string to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::kUnbranched: return "unbranched";
    case CoverKind::kBranched: return "branched";
    case CoverKind::kWeak: return "weak";
    case CoverKind::kInvalid: return "invalid";
  }
  return "invalid";
}

CoverClass classify(const CoverMap& f) {
  const Graph& t = f.total();
  const Graph& b = f.base();
  CoverClass out;
  out.local_degrees.assign(t.vertex_count(), 0);

  bool any_empty_fiber = false;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    if (f.vertex_fiber(v).empty()) {
      out.witnesses.push_back("base vertex " + b.vertex_id(v) + " has empty fiber");
      any_empty_fiber = true;
    }
  }

  bool any_not_onto = false;
  bool any_nonuniform = false;
  for (Vertex tv = 0; tv < t.vertex_count(); ++tv) {
    Vertex v = f.vertex_image(tv);
    std::unordered_map<Dart, std::uint32_t> counts;
    for (Dart d : t.darts_at(tv)) ++counts[f.dart_image(d)];
    std::uint32_t lo = static_cast<std::uint32_t>(-1);
    std::uint32_t hi = 0;
    for (Dart bd : b.darts_at(v)) {
      std::uint32_t c = counts.count(bd) ? counts[bd] : 0;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (c == 0 && !any_not_onto) {
        out.witnesses.push_back("base dart " + b.dart_id(bd) + " has no preimage at vertex " +
                                t.vertex_id(tv));
      }
    }
    if (b.darts_at(v).empty()) {
      lo = hi = 1;  // isolated base vertex: nothing to check locally
    }
    if (lo == 0) {
      any_not_onto = true;
    } else if (lo != hi) {
      any_nonuniform = true;
      out.witnesses.push_back("preimage counts at vertex " + t.vertex_id(tv) + " range from " +
                              std::to_string(lo) + " to " + std::to_string(hi));
    } else {
      out.local_degrees[tv] = lo;
    }
  }

  if (any_not_onto || any_empty_fiber) {
    out.kind = CoverKind::kInvalid;
    return out;
  }
  if (any_nonuniform) {
    out.kind = CoverKind::kWeak;
    return out;
  }

  // Uniform everywhere: the degree is the fiber weight over any base vertex
  // and the plain fiber size over any base edge; both must agree globally.
  std::uint32_t degree = 0;
  bool degree_set = false;
  bool consistent = true;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    std::uint32_t n = 0;
    for (Vertex tv : f.vertex_fiber(v)) n += out.local_degrees[tv];
    if (!degree_set) {
      degree = n;
      degree_set = true;
    } else if (n != degree) {
      out.witnesses.push_back("vertex fibers carry different weights: " + std::to_string(degree) +
                              " vs " + std::to_string(n) + " over " + b.vertex_id(v));
      consistent = false;
    }
  }
  for (Edge e = 0; e < b.edge_count(); ++e) {
    std::uint32_t n = static_cast<std::uint32_t>(f.edge_fiber(e).size());
    if (!degree_set) {
      degree = n;
      degree_set = true;
    } else if (n != degree) {
      out.witnesses.push_back("edge fiber over " + b.edge_id(e) + " has size " +
                              std::to_string(n) + ", expected " + std::to_string(degree));
      consistent = false;
    }
  }
  if (!consistent) {
    out.kind = CoverKind::kInvalid;
    return out;
  }

  out.degree = degree;
  for (Vertex tv = 0; tv < t.vertex_count(); ++tv) {
    if (out.local_degrees[tv] > 1) out.singular_vertices.push_back(tv);
  }
  out.kind = out.singular_vertices.empty() ? CoverKind::kUnbranched : CoverKind::kBranched;
  return out;
}

CoverMap build_cover(GraphPtr total, GraphPtr base,
                     const std::vector<std::pair<std::string, std::string>>& vertex_assignments,
                     const std::vector<std::pair<std::string, std::string>>& dart_assignments) {
  const Graph& t = *total;
  const Graph& b = *base;
  std::unordered_map<std::string, Vertex> t_vertex, b_vertex;
  for (Vertex v = 0; v < t.vertex_count(); ++v) t_vertex.emplace(t.vertex_id(v), v);
  for (Vertex v = 0; v < b.vertex_count(); ++v) b_vertex.emplace(b.vertex_id(v), v);
  std::unordered_map<std::string, Dart> t_dart, b_dart;
  for (Dart d = 0; d < t.dart_count(); ++d) t_dart.emplace(t.dart_id(d), d);
  for (Dart d = 0; d < b.dart_count(); ++d) b_dart.emplace(b.dart_id(d), d);

  std::vector<Vertex> vertex_map(t.vertex_count(), kNoVertex);
  for (const auto& [from, to] : vertex_assignments) {
    auto fi = t_vertex.find(from);
    auto ti = b_vertex.find(to);
    if (fi == t_vertex.end()) throw Error(ErrorCode::kMalformed, "unknown total vertex: " + from);
    if (ti == b_vertex.end()) throw Error(ErrorCode::kMalformed, "unknown base vertex: " + to);
    if (vertex_map[fi->second] != kNoVertex) {
      throw Error(ErrorCode::kMalformed, "vertex mapped twice: " + from);
    }
    vertex_map[fi->second] = ti->second;
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (vertex_map[v] == kNoVertex) {
      throw Error(ErrorCode::kMalformed, "vertex not mapped: " + t.vertex_id(v));
    }
  }

  std::vector<Dart> dart_map(t.dart_count(), kNoDart);
  for (const auto& [from, to] : dart_assignments) {
    auto fi = t_dart.find(from);
    auto ti = b_dart.find(to);
    if (fi == t_dart.end()) throw Error(ErrorCode::kMalformed, "unknown total dart: " + from);
    if (ti == b_dart.end()) throw Error(ErrorCode::kMalformed, "unknown base dart: " + to);
    if (dart_map[fi->second] != kNoDart) {
      // A fully explicit list repeats each edge's reverse; only a conflicting
      // repeat is an error.
      if (dart_map[fi->second] != ti->second) {
        throw Error(ErrorCode::kMalformed, "dart mapped twice: " + from);
      }
      continue;
    }
    dart_map[fi->second] = ti->second;
    // Fill the reverse when the file leaves it implicit.
    if (dart_map[reverse_dart(fi->second)] == kNoDart) {
      dart_map[reverse_dart(fi->second)] = reverse_dart(ti->second);
    }
  }
  for (Dart d = 0; d < t.dart_count(); ++d) {
    if (dart_map[d] == kNoDart) {
      throw Error(ErrorCode::kMalformed, "dart not mapped: " + t.dart_id(d));
    }
  }
  return CoverMap(std::move(total), std::move(base), std::move(vertex_map), std::move(dart_map));
}

namespace {

// Backtracking over dart images from a.total into b.total; assignments go in
// reversal pairs and pin vertex images as they appear.
struct CoverIsoSearch {
  const CoverMap& a;
  const CoverMap& b;
  const Budget& budget;
  std::uint64_t nodes = 0;

  std::vector<Dart> dmap;
  std::vector<Vertex> vmap;
  std::vector<bool> dart_used;
  std::vector<bool> vertex_used;
  std::vector<std::vector<Dart>> fiber_of;  // per base dart, fibers of b
  std::vector<GraphAutomorphism> found;

  CoverIsoSearch(const CoverMap& from, const CoverMap& to, const Budget& limit)
      : a(from), b(to), budget(limit), dmap(from.total().dart_count(), kNoDart),
        vmap(from.total().vertex_count(), kNoVertex),
        dart_used(to.total().dart_count(), false),
        vertex_used(to.total().vertex_count(), false),
        fiber_of(to.base().dart_count()) {
    for (Dart d = 0; d < b.total().dart_count(); ++d) {
      fiber_of[b.dart_image(d)].push_back(d);
    }
  }

  bool pin_vertex(Vertex from, Vertex to, std::vector<Vertex>& pinned) {
    if (vmap[from] != kNoVertex) return vmap[from] == to;
    if (vertex_used[to]) return false;
    vmap[from] = to;
    vertex_used[to] = true;
    pinned.push_back(from);
    return true;
  }

  void search(Dart next_dart) {
    budget.charge(++nodes, "cover isomorphism search");
    const Graph& t = a.total();
    const Graph& u = b.total();
    while (next_dart < t.dart_count() && dmap[next_dart] != kNoDart) ++next_dart;
    if (next_dart == t.dart_count()) {
      finish_vertices(0);
      return;
    }
    Dart d = next_dart;
    Dart r = reverse_dart(d);
    for (Dart x : fiber_of[a.dart_image(d)]) {
      if (dart_used[x]) continue;
      std::vector<Vertex> pinned;
      if (pin_vertex(t.endpoint(d), u.endpoint(x), pinned) &&
          pin_vertex(t.endpoint(r), u.endpoint(reverse_dart(x)), pinned)) {
        dmap[d] = x;
        dmap[r] = reverse_dart(x);
        dart_used[x] = dart_used[reverse_dart(x)] = true;
        search(d + 1);
        dmap[d] = dmap[r] = kNoDart;
        dart_used[x] = dart_used[reverse_dart(x)] = false;
      }
      for (Vertex v : pinned) {
        vertex_used[vmap[v]] = false;
        vmap[v] = kNoVertex;
      }
    }
  }

  // Isolated vertices are matched within their fibers at the end.
  void finish_vertices(Vertex v) {
    const Graph& t = a.total();
    while (v < t.vertex_count() && vmap[v] != kNoVertex) ++v;
    if (v == t.vertex_count()) {
      GraphAutomorphism j;
      j.vertex_map = vmap;
      j.dart_map = dmap;
      found.push_back(std::move(j));
      return;
    }
    budget.charge(++nodes, "cover isomorphism search");
    for (Vertex w = 0; w < b.total().vertex_count(); ++w) {
      if (vertex_used[w] || b.vertex_image(w) != a.vertex_image(v)) continue;
      vmap[v] = w;
      vertex_used[w] = true;
      finish_vertices(v + 1);
      vmap[v] = kNoVertex;
      vertex_used[w] = false;
    }
  }
};

}  // namespace

std::vector<GraphAutomorphism> cover_isomorphisms(const CoverMap& a, const CoverMap& b,
                                                  const Budget& budget) {
  if (!a.base().same_structure(b.base())) {
    throw Error(ErrorCode::kPrecondition, "cover isomorphisms need a common base graph");
  }
  if (a.total().vertex_count() != b.total().vertex_count() ||
      a.total().dart_count() != b.total().dart_count()) {
    return {};
  }
  CoverIsoSearch search(a, b, budget);
  search.search(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const GraphAutomorphism& x, const GraphAutomorphism& y) {
              return std::tie(x.vertex_map, x.dart_map) < std::tie(y.vertex_map, y.dart_map);
            });
  return search.found;
}

DeckGroup deck_group(const CoverMap& f, const Budget& budget) {
  return DeckGroup{cover_isomorphisms(f, f, budget)};
}

bool is_regular(const CoverMap& f, const DeckGroup& deck) {
  const Graph& b = f.base();
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    std::vector<Vertex> fiber = f.vertex_fiber(v);
    if (fiber.empty()) continue;
    for (Vertex target : fiber) {
      bool hit = false;
      for (const GraphAutomorphism& g : deck.elements) {
        if (g.vertex_map[fiber.front()] == target) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }
  for (Edge e = 0; e < b.edge_count(); ++e) {
    std::vector<Edge> fiber = f.edge_fiber(e);
    if (fiber.empty()) continue;
    for (Edge target : fiber) {
      bool hit = false;
      for (const GraphAutomorphism& g : deck.elements) {
        if (g.edge_image(fiber.front()) == target) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

CoverMap compose_covers(const CoverMap& f, const CoverMap& g) {
  if (!g.base().same_structure(f.total())) {
    throw Error(ErrorCode::kPrecondition, "cover composition needs matching middle graphs");
  }
  std::vector<Vertex> vmap(g.total().vertex_count());
  for (Vertex v = 0; v < vmap.size(); ++v) vmap[v] = f.vertex_image(g.vertex_image(v));
  std::vector<Dart> dmap(g.total().dart_count());
  for (Dart d = 0; d < dmap.size(); ++d) dmap[d] = f.dart_image(g.dart_image(d));
  return CoverMap(g.total_ptr(), f.base_ptr(), std::move(vmap), std::move(dmap));
}

}  // namespace plancover
