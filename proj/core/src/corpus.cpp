#include "plancover/corpus.hpp"

#include <algorithm>
#include <bitset>
#include <fstream>
#include <limits>
#include <numeric>

#include "plancover/enumerate.hpp"
#include "plancover/interchange.hpp"
#include "plancover/lifting.hpp"
#include "plancover/planarity.hpp"
#include "plancover/voltage.hpp"

namespace plancover {

GraphPtr k4() {
  std::vector<std::string> vertices = {"1", "2", "3", "4"};
  std::vector<std::pair<std::string, std::string>> ends;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      ends.emplace_back(vertices[i], vertices[j]);
      ids.push_back(vertices[i] + vertices[j]);
    }
  }
  return std::make_shared<const Graph>(build_graph(vertices, ends, ids));
}

GraphPtr q3() {
  std::vector<std::string> vertices;
  for (std::uint32_t v = 0; v < 8; ++v) vertices.push_back(std::bitset<3>(v).to_string());
  std::vector<std::pair<std::string, std::string>> ends;
  std::vector<std::string> ids;
  for (std::uint32_t v = 0; v < 8; ++v) {
    for (std::uint32_t bit = 0; bit < 3; ++bit) {
      std::uint32_t w = v ^ (1u << bit);
      if (w > v) {
        ends.emplace_back(vertices[v], vertices[w]);
        ids.push_back(vertices[v] + "-" + vertices[w]);
      }
    }
  }
  return std::make_shared<const Graph>(build_graph(vertices, ends, ids));
}

GraphPtr bouquet(std::uint32_t loops) {
  std::vector<std::pair<std::string, std::string>> ends(loops, {"v", "v"});
  std::vector<std::string> ids;
  for (std::uint32_t i = 0; i < loops; ++i) {
    ids.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                         : "l" + std::to_string(i));
  }
  return std::make_shared<const Graph>(build_graph({"v"}, ends, ids));
}

GraphPtr cycle_graph(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kPrecondition, "cycle length must be positive");
  std::vector<std::string> vertices;
  for (std::uint32_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> ends;
  std::vector<std::string> ids;
  for (std::uint32_t i = 0; i < n; ++i) {
    ends.emplace_back(vertices[i], vertices[(i + 1) % n]);
    ids.push_back("c" + std::to_string(i + 1));
  }
  return std::make_shared<const Graph>(build_graph(vertices, ends, ids));
}

GraphPtr k1222() {
  std::vector<std::string> vertices = {"a", "b1", "b2", "c1", "c2", "d1", "d2"};
  auto part = [](const std::string& id) { return id[0]; };
  std::vector<std::pair<std::string, std::string>> ends;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (part(vertices[i]) == part(vertices[j])) continue;
      ends.emplace_back(vertices[i], vertices[j]);
      ids.push_back(vertices[i] + vertices[j]);
    }
  }
  return std::make_shared<const Graph>(build_graph(vertices, ends, ids));
}

GraphPtr corpus_graph(const std::string& name) {
  if (name == "k4") return k4();
  if (name == "q3") return q3();
  if (name == "k1222") return k1222();
  auto parse_tail = [&](std::size_t pos) -> std::optional<std::uint32_t> {
    if (pos >= name.size()) return std::nullopt;
    std::uint32_t value = 0;
    for (; pos < name.size(); ++pos) {
      if (name[pos] < '0' || name[pos] > '9') return std::nullopt;
      value = value * 10 + static_cast<std::uint32_t>(name[pos] - '0');
    }
    return value;
  };
  if (name.rfind("bouquet", 0) == 0) {
    if (auto m = parse_tail(7)) return bouquet(*m);
  }
  if (!name.empty() && name[0] == 'c') {
    if (auto n = parse_tail(1)) return cycle_graph(*n);
  }
  throw Error(ErrorCode::kMalformed, "unknown corpus graph '" + name + "'");
}

EmbeddingScheme k4_planar_scheme() {
  GraphPtr g = k4();
  auto rotations = rotations_from_ids(*g, {
                                              {"12.0", "14.0", "13.0"},
                                              {"23.0", "24.0", "12.1"},
                                              {"13.1", "34.0", "23.1"},
                                              {"14.1", "24.1", "34.1"},
                                          });
  return EmbeddingScheme(g, rotations, std::vector<std::int8_t>(g->edge_count(), 1));
}

CoverMap identity_cover(GraphPtr g) {
  std::vector<Vertex> vmap(g->vertex_count());
  std::iota(vmap.begin(), vmap.end(), 0u);
  std::vector<Dart> dmap(g->dart_count());
  std::iota(dmap.begin(), dmap.end(), 0u);
  return CoverMap(g, g, std::move(vmap), std::move(dmap));
}

CoverMap antipodal_cover_of_k4() {
  GraphPtr cube = q3();
  GraphPtr base = k4();
  // Antipodal vertex classes of the cube, in base order "1".."4".
  auto klass = [](std::uint32_t v) { return std::min(v, 7u - v); };
  std::vector<std::pair<std::string, std::string>> vertex_assignments;
  for (std::uint32_t v = 0; v < 8; ++v) {
    vertex_assignments.emplace_back(cube->vertex_id(v), std::to_string(klass(v) + 1));
  }
  std::vector<std::pair<std::string, std::string>> dart_assignments;
  for (Edge e = 0; e < cube->edge_count(); ++e) {
    auto [u, v] = cube->edge_ends(e);
    std::uint32_t cu = klass(u) + 1;
    std::uint32_t cv = klass(v) + 1;
    std::string base_edge = std::to_string(std::min(cu, cv)) + std::to_string(std::max(cu, cv));
    dart_assignments.emplace_back(cube->dart_id(dart_of(e, 0)),
                                  base_edge + (cu < cv ? ".0" : ".1"));
    dart_assignments.emplace_back(cube->dart_id(dart_of(e, 1)),
                                  base_edge + (cu < cv ? ".1" : ".0"));
  }
  return build_cover(cube, base, vertex_assignments, dart_assignments);
}

CoverWithScheme slit_double_cover_of_k4() {
  GraphPtr base = k4();
  std::vector<std::string> vertices = {"1a", "2a", "3a", "1b", "2b", "3b", "4"};
  std::vector<std::pair<std::string, std::string>> ends;
  std::vector<std::string> ids;
  for (char sheet : {'a', 'b'}) {
    std::string s(1, sheet);
    ends.emplace_back("1" + s, "2" + s);
    ids.push_back("12" + s);
    ends.emplace_back("1" + s, "3" + s);
    ids.push_back("13" + s);
    ends.emplace_back("2" + s, "3" + s);
    ids.push_back("23" + s);
    ends.emplace_back("1" + s, "4");
    ids.push_back("14" + s);
    ends.emplace_back("2" + s, "4");
    ids.push_back("24" + s);
    ends.emplace_back("3" + s, "4");
    ids.push_back("34" + s);
  }
  auto total = std::make_shared<const Graph>(build_graph(vertices, ends, ids));

  std::vector<std::pair<std::string, std::string>> vertex_assignments = {
      {"1a", "1"}, {"2a", "2"}, {"3a", "3"}, {"1b", "1"}, {"2b", "2"}, {"3b", "3"}, {"4", "4"}};
  std::vector<std::pair<std::string, std::string>> dart_assignments;
  for (const std::string& eid : {std::string("12"), std::string("13"), std::string("23"),
                                 std::string("14"), std::string("24"), std::string("34")}) {
    for (char sheet : {'a', 'b'}) {
      std::string s(1, sheet);
      dart_assignments.emplace_back(eid + s + ".0", eid + ".0");
      dart_assignments.emplace_back(eid + s + ".1", eid + ".1");
    }
  }
  CoverMap cover = build_cover(total, base, vertex_assignments, dart_assignments);

  // Sheets copy the planar base rotations; the merged vertex interleaves
  // them, so its order projects to the base order twice.
  auto rotations = rotations_from_ids(
      *total, {
                  {"12a.0", "14a.0", "13a.0"},
                  {"23a.0", "24a.0", "12a.1"},
                  {"13a.1", "34a.0", "23a.1"},
                  {"12b.0", "14b.0", "13b.0"},
                  {"23b.0", "24b.0", "12b.1"},
                  {"13b.1", "34b.0", "23b.1"},
                  {"14a.1", "24a.1", "34a.1", "14b.1", "24b.1", "34b.1"},
              });
  EmbeddingScheme scheme(total, rotations, std::vector<std::int8_t>(total->edge_count(), 1));
  return CoverWithScheme(std::move(cover), std::move(scheme));
}

CoverMap weak_cover_example() {
  auto base = std::make_shared<const Graph>(
      build_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, {"uv", "vw"}));
  auto total = std::make_shared<const Graph>(build_graph(
      {"u1", "v1", "w1", "w2"}, {{"u1", "v1"}, {"v1", "w1"}, {"v1", "w2"}}, {"uv1", "vw1", "vw2"}));
  return build_cover(total, base,
                     {{"u1", "u"}, {"v1", "v"}, {"w1", "w"}, {"w2", "w"}},
                     {{"uv1.0", "uv.0"}, {"uv1.1", "uv.1"},
                      {"vw1.0", "vw.0"}, {"vw1.1", "vw.1"},
                      {"vw2.0", "vw.0"}, {"vw2.1", "vw.1"}});
}

namespace {

// First projective-plane scheme on the cover's total graph whose orientation
// double cover composes with the cover into one satisfying both conditions.
std::optional<EmbeddingScheme> find_lifting_p2_scheme(const CoverMap& cover,
                                                      const Budget& budget) {
  std::optional<EmbeddingScheme> hit;
  SchemeEnumOptions enum_opts;
  enum_opts.vary_signature = true;
  enum_opts.budget = budget;
  enumerate_rotation_systems(cover.total_ptr(), enum_opts, [&](const EmbeddingScheme& s) {
    if (s.euler_characteristic() != 1) return true;
    OrientationDoubleCover odc = orientation_double_cover(s);
    CoverMap lifted = compose_covers(cover, odc.projection);
    PropertyVReport pv = check_property_v(lifted, odc.lifted_scheme);
    if (!pv.holds) return true;
    PropertyESearch es = search_property_e(lifted, pv, budget);
    if (!es.found) return true;
    hit.emplace(s);
    return false;
  });
  return hit;
}

}  // namespace

std::vector<CorpusEntry> derived_examples(const Budget& budget) {
  std::vector<CorpusEntry> entries;

  // (a) Irregular planar triple cover of the two-loop bouquet.
  {
    GraphPtr base = bouquet(2);
    std::vector<Permutation> s3 = symmetric_group(3);
    bool found = false;
    for (const Permutation& pa : s3) {
      for (const Permutation& pb : s3) {
        CoverMap cover = voltage_cover(base, voltages_from_edges(*base, 3, {pa, pb}));
        if (!cover.total().connected()) continue;
        DeckGroup deck = deck_group(cover, budget);
        if (is_regular(cover, deck)) continue;
        PevSearchOptions opts;
        opts.budget = budget;
        PevSearchResult sweep = check_pev_any_embedding(cover, opts);
        if (!sweep.found) continue;
        CorpusEntry entry;
        entry.name = "irregular-triple-cover-of-bouquet2";
        entry.note = "monodromy search over pairs of fiber permutations; deck group order " +
                     std::to_string(deck.order());
        entry.assumption_flags = {"base has loops"};
        entry.cover.emplace(std::move(cover));
        entry.scheme.emplace(sweep.certificate->scheme);
        entry.signs.emplace(sweep.certificate->signs);
        entries.push_back(std::move(entry));
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      CorpusEntry entry;
      entry.name = "irregular-triple-cover-of-bouquet2";
      entry.note = "no irregular triple cover with a sphere embedding satisfying both "
                   "conditions was found";
      entries.push_back(std::move(entry));
    }
  }

  // (b) Connected planar double covers of k4 with sphere and projective-plane
  // quotients.
  {
    bool have_sphere = false, have_p2 = false;
    for (CoverMap& cover : connected_double_covers(k4(), budget)) {
      if (have_sphere && have_p2) break;
      PevSearchOptions opts;
      opts.budget = budget;
      PevSearchResult sweep = check_pev_any_embedding(cover, opts);
      if (!sweep.found) continue;
      QuotientReport q =
          quotient_embedding(cover, sweep.certificate->scheme, sweep.certificate->signs);
      bool sphere = q.surface == SurfaceId{true, 0};
      if (sphere ? have_sphere : have_p2) continue;
      (sphere ? have_sphere : have_p2) = true;
      CorpusEntry entry;
      entry.name = sphere ? "double-cover-of-k4-with-sphere-quotient"
                          : "double-cover-of-k4-with-projective-quotient";
      entry.note = "cotree sign sweep over the seven connected double covers";
      entry.cover.emplace(std::move(cover));
      entry.scheme.emplace(sweep.certificate->scheme);
      entry.signs.emplace(sweep.certificate->signs);
      entries.push_back(std::move(entry));
    }
  }

  // (c) A planar cover of k4 with no sphere scheme satisfying the conditions
  // whose projective-plane embedding lifts to one that does.
  {
    GraphPtr base = k4();
    std::optional<CorpusEntry> hit;
    std::vector<Permutation> groups[2] = {symmetric_group(2), symmetric_group(3)};
    for (std::uint32_t which = 0; which < 2 && !hit; ++which) {
      const auto& group = groups[which];
      const std::uint32_t fiber = which + 2;
      // Voltages on the three cotree edges of the spanning tree {12, 13, 14}.
      std::vector<std::uint32_t> digits(3, 0);
      for (bool carry = false; !carry;) {
        std::vector<Permutation> edge_voltage(6, Permutation::identity(fiber));
        // Edges in construction order: 12, 13, 14, 23, 24, 34; the last three
        // are the cotree.
        for (std::size_t i = 0; i < 3; ++i) edge_voltage[3 + i] = group[digits[i]];
        CoverMap cover = voltage_cover(base, voltages_from_edges(*base, fiber, edge_voltage));
        if (cover.total().connected() && planar_embed(cover.total_ptr()).has_value()) {
          PevSearchOptions opts;
          opts.budget = budget;
          PevSearchResult sweep = check_pev_any_embedding(cover, opts);
          if (!sweep.found) {
            if (auto p2 = find_lifting_p2_scheme(cover, budget)) {
              CorpusEntry entry;
              entry.name = "k4-cover-that-must-lift";
              entry.note = "fails both conditions for every sphere scheme (" +
                           std::to_string(sweep.sphere_schemes) +
                           " checked); a projective-plane scheme lifts to a sphere cover "
                           "satisfying them";
              entry.cover.emplace(std::move(cover));
              entry.scheme.emplace(std::move(*p2));
              hit.emplace(std::move(entry));
            }
          }
        }
        carry = true;
        for (std::size_t i = 0; i < digits.size() && carry; ++i) {
          carry = ++digits[i] == group.size();
          if (carry) digits[i] = 0;
        }
        if (hit) break;
      }
    }
    if (hit) {
      entries.push_back(std::move(*hit));
    } else {
      CorpusEntry entry;
      entry.name = "k4-cover-that-must-lift";
      entry.note = "no double or triple cover of k4 with this behaviour was found";
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

HarnessReport conjecture_harness(GraphPtr g, const std::string& graph_name,
                                 const HarnessOptions& opts) {
  if (!g->connected()) {
    throw Error(ErrorCode::kPrecondition, "the sweep needs a connected base graph");
  }
  if (opts.results_path.empty()) {
    throw Error(ErrorCode::kPrecondition, "the sweep needs a results path");
  }
  if (opts.max_degree < 2) {
    throw Error(ErrorCode::kPrecondition, "the sweep starts at degree 2");
  }

  HarnessReport report;
  std::uint64_t done = 0;
  if (opts.resume) {
    std::ifstream in(opts.results_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      Json doc = parse_document(line);
      if (document_kind(doc) != "results_table") {
        throw Error(ErrorCode::kMalformed, "results file holds a non-record line");
      }
      if (is_completed_marker(doc)) {
        report.records_skipped = done;
        report.completed = true;
        return report;
      }
      ++done;
    }
  }
  report.records_skipped = done;

  std::ofstream out(opts.results_path, opts.resume ? std::ios::app : std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kPrecondition, "cannot open results file " + opts.results_path);
  }

  // Cotree of a spanning tree; tree edges always carry the identity voltage.
  const Graph& base = *g;
  std::vector<bool> in_tree(base.edge_count(), false);
  {
    std::vector<bool> seen(base.vertex_count(), false);
    std::vector<Vertex> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : base.darts_at(v)) {
        Vertex w = base.other_endpoint(d);
        if (!seen[w]) {
          seen[w] = true;
          in_tree[edge_of(d)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Edge> cotree;
  for (Edge e = 0; e < base.edge_count(); ++e) {
    if (!in_tree[e]) cotree.push_back(e);
  }

  std::uint64_t seen_connected = 0;
  for (std::uint32_t degree = 2; degree <= opts.max_degree; ++degree) {
    std::vector<Permutation> group = symmetric_group(degree);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cotree.size(); ++i) {
      if (total > opts.cover_budget.max_items / group.size() + 1) {
        total = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      total *= group.size();
    }
    opts.cover_budget.charge(total, "voltage assignment sweep");

    std::vector<std::uint32_t> digits(cotree.size(), 0);
    for (std::uint64_t index = 0; index < total; ++index) {
      std::vector<Permutation> edge_voltage(base.edge_count(), Permutation::identity(degree));
      for (std::size_t i = 0; i < cotree.size(); ++i) edge_voltage[cotree[i]] = group[digits[i]];

      // Advance the odometer now so `continue` stays simple.
      bool carry = true;
      for (std::size_t i = 0; i < digits.size() && carry; ++i) {
        carry = ++digits[i] == group.size();
        if (carry) digits[i] = 0;
      }

      CoverMap cover = voltage_cover(g, voltages_from_edges(base, degree, edge_voltage));
      if (!cover.total().connected()) continue;
      if (seen_connected++ < done) continue;

      ResultsRecord record;
      record.graph = graph_name;
      record.degree = degree;
      record.index = index;
      record.planar = planar_embed(cover.total_ptr()).has_value();
      if (!record.planar) {
        record.pev = "not-found";  // no sphere scheme exists at all
      } else {
        try {
          PevSearchOptions pev_opts;
          pev_opts.budget = opts.embedding_budget;
          PevSearchResult sweep = check_pev_any_embedding(cover, pev_opts);
          record.sphere_schemes = sweep.sphere_schemes;
          if (sweep.found) {
            record.pev = "found";
            record.surface = quotient_embedding(cover, sweep.certificate->scheme,
                                                sweep.certificate->signs)
                                 .surface.name();
          } else {
            record.pev = "not-found";
          }
        } catch (const BudgetExceeded&) {
          record.pev = "out-of-budget";
        }
      }
      out << emit_record(results_record_to_json(record));
      out.flush();
      ++report.records_written;
    }
  }
  out << emit_record(results_completed_marker(graph_name));
  out.flush();
  report.completed = true;
  return report;
}

}  // namespace plancover
