#include "plancover/lifting.hpp"

#include <algorithm>
#include <utility>

namespace plancover {

namespace {

// Lifted indices: vertex (v, bit) -> 2v + bit, edge copy (e, bit) -> 2e + bit,
// with bit 0 the plus copy.  The lift of base dart d seen from the lifted
// vertex (endpoint(d), bit) lies in the copy that attaches there.
Dart lift_dart(const EmbeddingScheme& s, Dart d, std::uint32_t bit) {
  Edge e = edge_of(d);
  std::uint32_t copy = bit;
  if (end_of(d) == 1 && s.sign(e) < 0) copy ^= 1u;
  return dart_of(2 * e + copy, end_of(d));
}

}  // namespace

OrientationDoubleCover orientation_double_cover(const EmbeddingScheme& s) {
  const Graph& g = s.graph();
  if (!g.connected()) {
    throw Error(ErrorCode::kPrecondition, "orientation double cover needs a connected base");
  }

  std::vector<std::string> vertex_ids;
  vertex_ids.reserve(2 * g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    vertex_ids.push_back(g.vertex_id(v) + "+");
    vertex_ids.push_back(g.vertex_id(v) + "-");
  }
  std::vector<std::string> edge_ids;
  edge_ids.reserve(2 * g.edge_count());
  std::vector<std::pair<Vertex, Vertex>> endpoints;
  endpoints.reserve(2 * g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    std::uint32_t flip = s.sign(e) < 0 ? 1u : 0u;
    edge_ids.push_back(g.edge_id(e) + "+");
    endpoints.emplace_back(2 * u, 2 * v + flip);
    edge_ids.push_back(g.edge_id(e) + "-");
    endpoints.emplace_back(2 * u + 1, 2 * v + (flip ^ 1u));
  }
  auto lifted = std::make_shared<const Graph>(std::move(vertex_ids), std::move(edge_ids),
                                              std::move(endpoints));

  // Plus copies inherit the rotation, minus copies the reversed rotation.
  std::vector<std::vector<Dart>> rotations(lifted->vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Dart> rot = s.rotation_at(v);
    rotations[2 * v].reserve(rot.size());
    for (Dart d : rot) rotations[2 * v].push_back(lift_dart(s, d, 0));
    std::reverse(rot.begin(), rot.end());
    rotations[2 * v + 1].reserve(rot.size());
    for (Dart d : rot) rotations[2 * v + 1].push_back(lift_dart(s, d, 1));
  }
  EmbeddingScheme lifted_scheme(lifted, rotations,
                                std::vector<std::int8_t>(lifted->edge_count(), 1));

  std::vector<Vertex> vertex_map(lifted->vertex_count());
  for (Vertex v = 0; v < lifted->vertex_count(); ++v) vertex_map[v] = v / 2;
  std::vector<Dart> dart_map(lifted->dart_count());
  for (Edge e = 0; e < g.edge_count(); ++e) {
    for (std::uint32_t copy = 0; copy < 2; ++copy) {
      dart_map[dart_of(2 * e + copy, 0)] = dart_of(e, 0);
      dart_map[dart_of(2 * e + copy, 1)] = dart_of(e, 1);
    }
  }
  CoverMap projection(lifted, s.graph_ptr(), std::move(vertex_map), std::move(dart_map));

  bool connected = lifted->connected();
  if (connected == s.orientable()) {
    throw Error(ErrorCode::kInternal,
                "orientation double cover connectivity disagrees with orientability");
  }
  if (g.edge_count() > 0 &&
      lifted_scheme.euler_characteristic() != 2 * s.euler_characteristic()) {
    throw Error(ErrorCode::kInternal,
                "orientation double cover does not double the Euler characteristic");
  }
  return OrientationDoubleCover(std::move(lifted_scheme), std::move(projection), connected);
}

FactorThroughUniversal factor_through_universal(const CoverMap& c, const QuotientReport& q,
                                                const SignAssignment& signs) {
  if (!(q.sign_verdict == SurfaceId{false, 1})) {
    throw Error(ErrorCode::kPrecondition,
                "quotient embeds in the sphere; the orientation double cover splits");
  }
  if (!q.scheme.graph().same_structure(c.base())) {
    throw Error(ErrorCode::kPrecondition, "quotient scheme is not on the base of the cover");
  }
  PropertyEReport pe = check_property_e(c, signs);
  if (!pe.holds || pe.edge_sign != q.scheme.signature()) {
    throw Error(ErrorCode::kPrecondition, "sign data does not belong to this quotient");
  }

  OrientationDoubleCover odc = orientation_double_cover(q.scheme);

  const Graph& t = c.total();
  std::vector<Vertex> vertex_map(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    vertex_map[v] = 2 * c.vertex_image(v) + (signs.sign[v] < 0 ? 1u : 0u);
  }
  std::vector<Dart> dart_map(t.dart_count());
  for (Dart d = 0; d < t.dart_count(); ++d) {
    std::uint32_t bit = signs.sign[t.endpoint(d)] < 0 ? 1u : 0u;
    dart_map[d] = lift_dart(q.scheme, c.dart_image(d), bit);
  }
  CoverMap lift(c.total_ptr(), odc.projection.total_ptr(), std::move(vertex_map),
                std::move(dart_map));

  // The projection must undo the lift exactly, dart for dart.
  CoverMap composite = compose_covers(odc.projection, lift);
  if (composite.vertex_map() != c.vertex_map() || composite.dart_map() != c.dart_map()) {
    throw Error(ErrorCode::kInternal, "factored lift does not compose back to the cover");
  }
  return FactorThroughUniversal(std::move(odc), std::move(lift));
}

NecessityResult necessity_pipeline(const CoverMap& f, const CoverMap& f_tilde,
                                   const EmbeddingScheme& s, const PevSearchOptions& opts) {
  CoverClass outer = classify(f);
  if (outer.kind != CoverKind::kUnbranched) {
    throw Error(ErrorCode::kPrecondition, "the outer map must be an unbranched cover");
  }

  CoverMap composite = compose_covers(f, f_tilde);
  PropertyVReport pv_comp = check_property_v(composite, s);
  if (!pv_comp.holds) {
    throw Error(ErrorCode::kPrecondition,
                "the composite cover fails the vertex condition under the given scheme: " +
                    pv_comp.witnesses.front());
  }
  PropertyESearch es_comp = search_property_e(composite, pv_comp, opts.budget);
  if (!es_comp.found) {
    throw Error(ErrorCode::kPrecondition,
                "the composite cover fails the edge condition under the given scheme");
  }

  // The same scheme and the very same signs must work for the inner cover.
  PropertyVReport pv_mid = check_property_v(f_tilde, s);
  if (!pv_mid.holds) {
    throw Error(ErrorCode::kInternal, "inner cover lost the vertex condition");
  }
  if (!signs_valid(f_tilde, pv_mid, es_comp.signs->sign)) {
    throw Error(ErrorCode::kInternal, "composite signs are not valid for the inner cover");
  }
  SignAssignment mid_signs;
  mid_signs.sign = es_comp.signs->sign;
  for (const InducedOrder& order : pv_mid.orders) {
    if (!order.ambiguous) continue;
    mid_signs.ambiguous.insert(mid_signs.ambiguous.end(), order.fiber.begin(), order.fiber.end());
  }
  std::sort(mid_signs.ambiguous.begin(), mid_signs.ambiguous.end());
  PropertyEReport pe_mid = check_property_e(f_tilde, mid_signs);
  if (!pe_mid.holds) {
    throw Error(ErrorCode::kInternal, "inner cover lost the edge condition");
  }

  NecessityResult result;
  result.middle.emplace(quotient_embedding(f_tilde, s, mid_signs));
  const QuotientReport& middle = *result.middle;

  if (middle.surface == SurfaceId{true, 0}) {
    // Sphere case: the outer cover fulfills both conditions, first tried with
    // the induced scheme itself, then across all sphere schemes.
    PropertyVReport pv_f = check_property_v(f, middle.scheme);
    PropertyESearch es_f =
        pv_f.holds ? search_property_e(f, pv_f, opts.budget) : PropertyESearch{};
    if (pv_f.holds && es_f.found) {
      PevCertificate cert(middle.scheme, std::move(pv_f), std::move(*es_f.signs),
                          std::move(*es_f.report));
      result.case1.emplace(middle.scheme, std::move(cert), true);
      return result;
    }
    PevSearchResult sweep = check_pev_any_embedding(f, opts);
    if (!sweep.found) {
      throw Error(ErrorCode::kInternal, "sphere case found no scheme for the outer cover");
    }
    result.case1.emplace(middle.scheme, std::move(*sweep.certificate), false);
    return result;
  }

  // Projective-plane case: lift the outer cover through the orientation
  // double cover of the induced scheme and certify the conditions up there.
  OrientationDoubleCover odc = orientation_double_cover(middle.scheme);
  CoverMap lifted_cover = compose_covers(f, odc.projection);
  PropertyVReport pv_l = check_property_v(lifted_cover, odc.lifted_scheme);
  if (!pv_l.holds) {
    throw Error(ErrorCode::kInternal, "lifted cover fails the vertex condition");
  }
  PropertyESearch es_l = search_property_e(lifted_cover, pv_l, opts.budget);
  if (!es_l.found) {
    throw Error(ErrorCode::kInternal, "lifted cover fails the edge condition");
  }
  PevCertificate cert(odc.lifted_scheme, std::move(pv_l), std::move(*es_l.signs),
                      std::move(*es_l.report));
  result.case2.emplace(std::move(odc), std::move(lifted_cover), std::move(cert));
  return result;
}

bool schemes_cover_isomorphic(const CoverMap& a, const EmbeddingScheme& sa, const CoverMap& b,
                              const EmbeddingScheme& sb, const Budget& budget) {
  if (!sa.graph().same_structure(a.total()) || !sb.graph().same_structure(b.total())) {
    throw Error(ErrorCode::kPrecondition, "schemes must live on the covers' total graphs");
  }
  for (const GraphAutomorphism& j : cover_isomorphisms(a, b, budget)) {
    auto carries = [&](bool reversed) {
      for (Dart d = 0; d < sa.graph().dart_count(); ++d) {
        Dart image = reversed ? sb.prev_around(j.dart_map[d]) : sb.next_around(j.dart_map[d]);
        if (image != j.dart_map[sa.next_around(d)]) return false;
        if (sb.sign(edge_of(j.dart_map[d])) != sa.sign(edge_of(d))) return false;
      }
      return true;
    };
    if (carries(false) || carries(true)) return true;
  }
  return false;
}

}  // namespace plancover
