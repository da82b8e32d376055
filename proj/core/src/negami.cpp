#include "plancover/negami.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "plancover/enumerate.hpp"

namespace plancover {

namespace {

// Rotate a cyclic word of distinct darts to start at its smallest entry.
std::vector<Dart> canonical_cycle(std::vector<Dart> word) {
  if (word.empty()) return word;
  auto min_it = std::min_element(word.begin(), word.end());
  std::rotate(word.begin(), min_it, word.end());
  return word;
}

std::vector<Dart> reversed_cycle(std::vector<Dart> word) {
  std::reverse(word.begin(), word.end());
  return canonical_cycle(std::move(word));
}

std::string dart_word(const Graph& g, const std::vector<Dart>& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += g.dart_id(word[i]);
  }
  return out + ")";
}

// Common entry checks: f must be an actual cover and s a sphere scheme on its
// total graph.  Returns the classification and the normalized scheme.
std::pair<CoverClass, EmbeddingScheme> require_cover_on_sphere(const CoverMap& f,
                                                               const EmbeddingScheme& s) {
  CoverClass cls = classify(f);
  if (!cls.is_cover()) {
    std::string detail = cls.witnesses.empty() ? "" : ": " + cls.witnesses.front();
    throw Error(ErrorCode::kPrecondition,
                "the map is a " + to_string(cls.kind) + " cover candidate" + detail);
  }
  if (!s.graph().same_structure(f.total())) {
    throw Error(ErrorCode::kPrecondition, "scheme is not on the total graph of the cover");
  }
  EmbeddingScheme sn = s.normalized();
  for (Edge e = 0; e < sn.graph().edge_count(); ++e) {
    if (sn.sign(e) < 0) {
      throw Error(ErrorCode::kPrecondition, "scheme is not orientable, so not a sphere scheme");
    }
  }
  if (sn.euler_characteristic() != 2) {
    throw Error(ErrorCode::kPrecondition, "scheme does not embed the total graph in the sphere");
  }
  return {std::move(cls), std::move(sn)};
}

void require_signs_shape(const CoverMap& f, const std::vector<std::int8_t>& sign) {
  if (sign.size() != f.total().vertex_count()) {
    throw Error(ErrorCode::kMalformed, "sign assignment size mismatch");
  }
  for (Vertex v = 0; v < sign.size(); ++v) {
    if (sign[v] != 1 && sign[v] != -1) {
      throw Error(ErrorCode::kMalformed,
                  "vertex " + f.total().vertex_id(v) + " carries no definite sign");
    }
  }
}

}  // namespace

PropertyVReport check_property_v(const CoverMap& f, const EmbeddingScheme& s,
                                 const PropertyVOptions& opts) {
  auto [cls, sn] = require_cover_on_sphere(f, s);
  const Graph& t = f.total();
  const Graph& b = f.base();

  PropertyVReport report;
  report.orders.reserve(b.vertex_count());
  bool ok = true;

  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    InducedOrder order;
    order.base_vertex = v;
    order.fiber = f.vertex_fiber(v);
    order.alignment.assign(order.fiber.size(), 0);
    const std::uint32_t k = b.degree(v);

    std::vector<Dart> reference;        // canonical order of the first good preimage
    std::vector<Dart> reference_rev;
    bool reference_set = false;

    for (std::size_t i = 0; i < order.fiber.size(); ++i) {
      Vertex tv = order.fiber[i];
      std::vector<Dart> rot = sn.rotation_at(tv);
      std::vector<Dart> projected(rot.size());
      for (std::size_t j = 0; j < rot.size(); ++j) projected[j] = f.dart_image(rot[j]);

      // Condition one: the projection is a local_degree-fold repetition of a
      // cyclic order hitting every dart at v exactly once.
      const std::uint32_t d = cls.local_degrees[tv];
      std::vector<Dart> word(projected.begin(), projected.begin() + k);
      std::vector<Dart> sorted = word;
      std::sort(sorted.begin(), sorted.end());
      bool one_each = sorted == b.darts_at(v);
      bool repeats = true;
      for (std::size_t j = 0; j < projected.size(); ++j) {
        if (projected[j] != word[j % k]) {
          repeats = false;
          break;
        }
      }
      if (!one_each || !repeats) {
        ok = false;
        report.witnesses.push_back("rotation at " + t.vertex_id(tv) + " projects to " +
                                   dart_word(b, projected) + ", not " + std::to_string(d) +
                                   " repetitions of one cyclic order around " + b.vertex_id(v));
        continue;
      }

      std::vector<Dart> canon = canonical_cycle(word);
      std::vector<Dart> canon_rev = reversed_cycle(std::move(word));
      if (!reference_set) {
        reference = canon;
        reference_rev = canon_rev;
        reference_set = true;
        order.order = reference;
        order.ambiguous = reference == reference_rev;
      }
      bool matches = canon == reference;
      bool matches_rev = canon == reference_rev;
      if (order.ambiguous) {
        if (!matches) {
          ok = false;
          report.witnesses.push_back("preimages " + t.vertex_id(order.fiber.front()) + " and " +
                                     t.vertex_id(tv) + " of " + b.vertex_id(v) +
                                     " induce different cyclic orders");
        }
        continue;  // alignment stays 0
      }
      if (matches) {
        order.alignment[i] = 1;
      } else if (matches_rev) {
        if (opts.strict) {
          ok = false;
          report.witnesses.push_back("rotation at " + t.vertex_id(tv) +
                                     " matches only the reversal of the order around " +
                                     b.vertex_id(v) + ", rejected in strict mode");
        }
        order.alignment[i] = -1;
      } else {
        ok = false;
        report.witnesses.push_back("preimages " + t.vertex_id(order.fiber.front()) + " and " +
                                   t.vertex_id(tv) + " of " + b.vertex_id(v) +
                                   " induce different cyclic orders: " + dart_word(b, reference) +
                                   " vs " + dart_word(b, canon));
      }
    }
    report.orders.push_back(std::move(order));
  }

  report.holds = ok;
  return report;
}

SignAssignment assign_signs(const CoverMap& f, const PropertyVReport& pv,
                            const std::vector<std::int8_t>& base_sign) {
  if (!pv.holds) {
    throw Error(ErrorCode::kPrecondition, "sign assignment needs the vertex condition to hold");
  }
  const Graph& b = f.base();
  std::vector<std::int8_t> base = base_sign;
  if (base.empty()) base.assign(b.vertex_count(), 1);
  if (base.size() != b.vertex_count()) {
    throw Error(ErrorCode::kMalformed, "need one base sign per base vertex");
  }
  for (std::int8_t sgn : base) {
    if (sgn != 1 && sgn != -1) throw Error(ErrorCode::kMalformed, "base signs must be +1 or -1");
  }

  SignAssignment out;
  out.sign.assign(f.total().vertex_count(), 0);
  for (const InducedOrder& order : pv.orders) {
    std::int8_t s0 = base[order.base_vertex];
    for (std::size_t i = 0; i < order.fiber.size(); ++i) {
      Vertex tv = order.fiber[i];
      if (order.ambiguous) {
        out.sign[tv] = s0;  // provisional; a free choice
        out.ambiguous.push_back(tv);
      } else {
        out.sign[tv] = static_cast<std::int8_t>(order.alignment[i] * s0);
      }
    }
  }
  std::sort(out.ambiguous.begin(), out.ambiguous.end());
  return out;
}

bool signs_valid(const CoverMap& f, const PropertyVReport& pv,
                 const std::vector<std::int8_t>& sign) {
  if (!pv.holds) {
    throw Error(ErrorCode::kPrecondition, "sign validity needs the vertex condition to hold");
  }
  require_signs_shape(f, sign);
  for (const InducedOrder& order : pv.orders) {
    if (order.ambiguous || order.fiber.empty()) continue;
    std::int8_t s0 = sign[order.fiber.front()];
    for (std::size_t i = 0; i < order.fiber.size(); ++i) {
      if (sign[order.fiber[i]] != order.alignment[i] * s0) return false;
    }
  }
  return true;
}

PropertyEReport check_property_e(const CoverMap& f, const SignAssignment& signs) {
  require_signs_shape(f, signs.sign);
  const Graph& t = f.total();
  const Graph& b = f.base();

  PropertyEReport report;
  report.edge_sign.assign(b.edge_count(), 0);
  std::vector<Edge> first_lift(b.edge_count(), kNoVertex);
  bool ok = true;

  for (Edge te = 0; te < t.edge_count(); ++te) {
    auto [u, v] = t.edge_ends(te);
    auto product = static_cast<std::int8_t>(signs.sign[u] * signs.sign[v]);
    Edge e = f.edge_image(te);
    if (report.edge_sign[e] == 0) {
      report.edge_sign[e] = product;
      first_lift[e] = te;
    } else if (report.edge_sign[e] != product) {
      ok = false;
      report.witnesses.push_back("lifts " + t.edge_id(first_lift[e]) + " and " + t.edge_id(te) +
                                 " of " + b.edge_id(e) +
                                 " disagree on their endpoint sign product");
    }
  }
  for (Edge e = 0; e < b.edge_count(); ++e) {
    if (report.edge_sign[e] == 0) {
      ok = false;
      report.witnesses.push_back("base edge " + b.edge_id(e) + " has no lifts");
    }
  }
  report.holds = ok;
  return report;
}

PropertyESearch search_property_e(const CoverMap& f, const PropertyVReport& pv,
                                  const Budget& budget) {
  SignAssignment start = assign_signs(f, pv);

  // One representative per ambiguous fiber is pinned: flipping a whole fiber
  // never changes any edge's sign product, so those flips need no search.
  std::vector<Vertex> free_choices;
  for (const InducedOrder& order : pv.orders) {
    if (!order.ambiguous) continue;
    for (std::size_t i = 1; i < order.fiber.size(); ++i) free_choices.push_back(order.fiber[i]);
  }
  std::sort(free_choices.begin(), free_choices.end());

  if (free_choices.size() >= 63) {
    throw BudgetExceeded("edge condition search: too many ambiguous preimages",
                         std::numeric_limits<std::uint64_t>::max());
  }
  const std::uint64_t count = 1ull << free_choices.size();
  budget.charge(count, "edge condition search");

  PropertyESearch result;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    SignAssignment candidate = start;
    for (std::size_t i = 0; i < free_choices.size(); ++i) {
      if (mask & (1ull << i)) candidate.sign[free_choices[i]] = -1;
    }
    PropertyEReport report = check_property_e(f, candidate);
    ++result.assignments_tried;
    if (report.holds) {
      result.found = true;
      result.signs = std::move(candidate);
      result.report = std::move(report);
      return result;
    }
  }
  return result;
}

SurfaceId surface_from_signs(const CoverMap& f, const SignAssignment& signs) {
  require_signs_shape(f, signs.sign);
  const Graph& b = f.base();
  std::uint32_t mixed = 0;
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    std::vector<Vertex> fiber = f.vertex_fiber(v);
    if (fiber.empty()) {
      throw Error(ErrorCode::kPrecondition, "vertex " + b.vertex_id(v) + " has an empty fiber");
    }
    bool plus = false, minus = false;
    for (Vertex tv : fiber) (signs.sign[tv] > 0 ? plus : minus) = true;
    if (plus && minus) ++mixed;
  }
  if (mixed == 0) return SurfaceId{true, 0};
  if (mixed == b.vertex_count()) return SurfaceId{false, 1};
  throw Error(ErrorCode::kInternal,
              "mixed and pure vertex fibers coexist; the edge condition cannot have held");
}

QuotientReport quotient_embedding(const CoverMap& f, const EmbeddingScheme& s,
                                  const SignAssignment& signs) {
  PropertyVReport pv = check_property_v(f, s);
  if (!pv.holds) {
    throw Error(ErrorCode::kPrecondition,
                "vertex condition fails, no induced embedding: " + pv.witnesses.front());
  }
  if (!signs_valid(f, pv, signs.sign)) {
    throw Error(ErrorCode::kPrecondition, "sign assignment is incompatible with the rotations");
  }
  PropertyEReport pe = check_property_e(f, signs);
  if (!pe.holds) {
    throw Error(ErrorCode::kPrecondition,
                "edge condition fails, no induced embedding: " + pe.witnesses.front());
  }

  const Graph& t = f.total();
  const Graph& b = f.base();
  CoverClass cls = classify(f);
  EmbeddingScheme sn = s.normalized();

  // Rotations: read the order around a plus-signed preimage; an all-minus
  // fiber contributes the reversed reading of any member.
  std::vector<std::vector<Dart>> rotations(b.vertex_count());
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    const std::vector<Vertex>& fiber = pv.orders[v].fiber;
    Vertex rep = kNoVertex;
    for (Vertex tv : fiber) {
      if (signs.sign[tv] > 0) {
        rep = tv;
        break;
      }
    }
    bool reversed = rep == kNoVertex;
    if (reversed) rep = fiber.front();
    std::vector<Dart> rot = sn.rotation_at(rep);
    std::vector<Dart> word(b.degree(v));
    for (std::uint32_t j = 0; j < b.degree(v); ++j) word[j] = f.dart_image(rot[j]);
    if (reversed) std::reverse(word.begin(), word.end());
    rotations[v] = std::move(word);
  }
  EmbeddingScheme quotient(f.base_ptr(), rotations, pe.edge_sign);

  SurfaceId surface = quotient.surface_id();
  if (!(surface == SurfaceId{true, 0}) && !(surface == SurfaceId{false, 1})) {
    throw Error(ErrorCode::kInternal, "quotient scheme landed on " + surface.name());
  }
  SurfaceId verdict = surface_from_signs(f, signs);
  if (!(verdict == surface)) {
    throw Error(ErrorCode::kInternal, "sign verdict " + verdict.name() +
                                          " disagrees with the traced surface " + surface.name());
  }

  QuotientReport report(std::move(quotient), surface, verdict);
  report.total_graph = f.total_ptr();
  report.degree = cls.degree;

  // Windings: each face of the total scheme projects onto a trajectory of the
  // quotient trace, so its length is a multiple of the target face's orbit.
  std::vector<FaceWalk> qfaces = report.scheme.faces();
  std::vector<std::uint32_t> face_of(2u * report.scheme.graph().dart_count(), kNoVertex);
  std::vector<std::size_t> orbit_length(qfaces.size(), 0);
  for (std::uint32_t j = 0; j < qfaces.size(); ++j) {
    orbit_length[j] = qfaces[j].length();
    SignedDart sd = qfaces[j].start();
    SignedDart md = report.scheme.mirror_step(sd);
    for (std::size_t step = 0; step < qfaces[j].length(); ++step) {
      face_of[sd] = j;
      face_of[md] = j;
      sd = report.scheme.trace_step(sd);
      md = report.scheme.trace_step(md);
    }
  }

  report.total_faces = sn.faces();
  std::vector<std::uint32_t> face_sum(qfaces.size(), 0);
  for (const FaceWalk& walk : report.total_faces) {
    const std::size_t L = walk.length();
    SignedDart cur = make_signed(f.dart_image(walk.darts[0]),
                                 signs.sign[t.endpoint(walk.darts[0])]);
    SignedDart first = cur;
    for (std::size_t i = 0; i < L; ++i) {
      if (walk.signs[i] < 0) {
        throw Error(ErrorCode::kInternal, "normalized total scheme produced a negative face walk");
      }
      SignedDart expect = make_signed(f.dart_image(walk.darts[i]),
                                      signs.sign[t.endpoint(walk.darts[i])]);
      if (cur != expect) {
        throw Error(ErrorCode::kInternal, "projected face walk is not a quotient trajectory");
      }
      cur = report.scheme.trace_step(cur);
    }
    if (cur != first) {
      throw Error(ErrorCode::kInternal, "projected face walk does not close up");
    }
    std::uint32_t j = face_of[first];
    if (j == kNoVertex || L % orbit_length[j] != 0) {
      throw Error(ErrorCode::kInternal, "face walk length is not a multiple of its image orbit");
    }
    auto winding = static_cast<std::uint32_t>(L / orbit_length[j]);
    report.windings.push_back(winding);
    face_sum[j] += winding;
  }
  for (std::uint32_t j = 0; j < qfaces.size(); ++j) {
    if (face_sum[j] != report.degree) {
      throw Error(ErrorCode::kInternal, "windings over a quotient face do not sum to the degree");
    }
  }

  // Euler bookkeeping: the sphere characteristic of the total scheme must
  // equal degree times the quotient characteristic, minus the branching and
  // winding defects.
  long long defect = 0;
  for (Vertex tv : cls.singular_vertices) defect += cls.local_degrees[tv] - 1;
  for (std::uint32_t w : report.windings) defect += w - 1;
  long long chi = report.scheme.euler_characteristic();
  if (2 != static_cast<long long>(report.degree) * chi - defect) {
    throw Error(ErrorCode::kInternal, "Euler characteristic bookkeeping failed");
  }
  return report;
}

PevSearchResult check_pev_any_embedding(const CoverMap& f, const PevSearchOptions& opts) {
  CoverClass cls = classify(f);
  if (!cls.is_cover()) {
    throw Error(ErrorCode::kPrecondition, "the map is a " + to_string(cls.kind) + " cover candidate");
  }
  PevSearchResult result;
  SchemeEnumOptions enum_opts;
  enum_opts.budget = opts.budget;
  enumerate_rotation_systems(f.total_ptr(), enum_opts, [&](const EmbeddingScheme& s) {
    ++result.rotation_systems;
    if (s.euler_characteristic() != 2) return true;
    ++result.sphere_schemes;
    PropertyVReport pv = check_property_v(f, s, opts.pv);
    if (!pv.holds) return true;
    PropertyESearch es = search_property_e(f, pv, opts.budget);
    if (!es.found) return true;
    result.found = true;
    result.certificate.emplace(s, std::move(pv), std::move(*es.signs), std::move(*es.report));
    return false;
  });
  return result;
}

EquivariantSearchResult equivariant_embedding_search(const CoverMap& f,
                                                     const PevSearchOptions& opts) {
  DeckGroup deck = deck_group(f, opts.budget);
  if (!is_regular(f, deck)) {
    throw Error(ErrorCode::kPrecondition, "equivariant embedding search needs a regular cover");
  }

  auto preserves = [](const GraphAutomorphism& g, const EmbeddingScheme& s) {
    for (Dart d = 0; d < s.graph().dart_count(); ++d) {
      if (s.next_around(g.dart_map[d]) != g.dart_map[s.next_around(d)]) return false;
    }
    return true;
  };
  auto reverses = [](const GraphAutomorphism& g, const EmbeddingScheme& s) {
    for (Dart d = 0; d < s.graph().dart_count(); ++d) {
      if (s.next_around(g.dart_map[d]) != g.dart_map[s.prev_around(d)]) return false;
    }
    return true;
  };

  EquivariantSearchResult result;
  SchemeEnumOptions enum_opts;
  enum_opts.budget = opts.budget;
  enumerate_rotation_systems(f.total_ptr(), enum_opts, [&](const EmbeddingScheme& s) {
    ++result.rotation_systems;
    if (s.euler_characteristic() != 2) return true;
    ++result.sphere_schemes;
    for (const GraphAutomorphism& g : deck.elements) {
      if (!preserves(g, s) && !reverses(g, s)) return true;
    }
    // Every deck transformation extends to the sphere, which forces both
    // conditions; trust nothing and verify.
    PropertyVReport pv = check_property_v(f, s);
    PropertyESearch es = pv.holds ? search_property_e(f, pv, opts.budget) : PropertyESearch{};
    if (!pv.holds || !es.found) {
      throw Error(ErrorCode::kInternal,
                  "deck-equivariant sphere scheme fails the vertex or edge condition");
    }
    result.found = true;
    result.scheme.emplace(s);
    result.certificate.emplace(s, std::move(pv), std::move(*es.signs), std::move(*es.report));
    return false;
  });
  return result;
}

}  // namespace plancover
