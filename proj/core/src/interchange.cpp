#include "plancover/interchange.hpp"

#include <algorithm>
#include <unordered_map>

namespace plancover {

namespace {

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kMalformed, std::string(what) + " must be a JSON object");
  }
}

// Shape check: every required key present, nothing outside the allowed set.
void require_fields(const Json& j, const char* what, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  require_object(j, what);
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw Error(ErrorCode::kMalformed, std::string(what) + " is missing field '" + key + "'");
    }
  }
  for (const auto& [key, value] : j.items()) {
    bool known = std::any_of(required.begin(), required.end(),
                             [&](const char* k) { return key == k; }) ||
                 std::any_of(optional.begin(), optional.end(),
                             [&](const char* k) { return key == k; });
    if (!known) {
      throw Error(ErrorCode::kMalformed, std::string(what) + " has unknown field '" + key + "'");
    }
  }
}

void require_header(const Json& j, const char* what) {
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != kFormatVersion) {
    throw Error(ErrorCode::kMalformed,
                std::string(what) + " needs format_version " + std::to_string(kFormatVersion));
  }
}

std::string get_string(const Json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::kMalformed, std::string(what) + " field '" + key + "' must be a string");
  }
  return j[key].get<std::string>();
}

std::int8_t get_sign(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::kMalformed, std::string(what) + " must be +1 or -1");
  }
  int s = j.get<int>();
  if (s != 1 && s != -1) {
    throw Error(ErrorCode::kMalformed, std::string(what) + " must be +1 or -1");
  }
  return static_cast<std::int8_t>(s);
}

void expect_kind(const Json& doc, const char* kind) {
  require_object(doc, "document");
  require_header(doc, kind);
  if (!doc.contains("kind") || doc["kind"] != kind) {
    throw Error(ErrorCode::kMalformed, std::string("expected a '") + kind + "' document");
  }
}

std::unordered_map<std::string, Vertex> vertex_index(const Graph& g) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < g.vertex_count(); ++v) index.emplace(g.vertex_id(v), v);
  return index;
}

std::unordered_map<std::string, Edge> edge_index(const Graph& g) {
  std::unordered_map<std::string, Edge> index;
  for (Edge e = 0; e < g.edge_count(); ++e) index.emplace(g.edge_id(e), e);
  return index;
}

// Dart ids look like "<edge>.<0|1>".
Dart parse_dart_id(const Graph& g, const std::unordered_map<std::string, Edge>& edges,
                   const std::string& id) {
  auto dot = id.rfind('.');
  if (dot == std::string::npos || dot + 2 != id.size() ||
      (id[dot + 1] != '0' && id[dot + 1] != '1')) {
    throw Error(ErrorCode::kMalformed, "bad dart id '" + id + "'");
  }
  auto it = edges.find(id.substr(0, dot));
  if (it == edges.end()) {
    throw Error(ErrorCode::kMalformed, "dart id '" + id + "' names no edge");
  }
  (void)g;
  return dart_of(it->second, id[dot + 1] == '1' ? 1u : 0u);
}

}  // namespace

std::string emit_document(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_record(const Json& doc) { return doc.dump() + "\n"; }

std::string document_kind(const Json& doc) {
  require_object(doc, "document");
  require_header(doc, "document");
  return get_string(doc, "kind", "document");
}

Json parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("invalid JSON: ") + e.what());
  }
  std::string kind = document_kind(doc);
  if (kind == "graph") {
    graph_from_json(doc);
  } else if (kind == "scheme") {
    scheme_from_json(doc);
  } else if (kind == "cover") {
    cover_from_json(doc);
  } else if (kind == "signs") {
    require_fields(doc, "signs document", {"format_version", "kind", "signs", "ambiguous"});
  } else if (kind == "quotient_report") {
    quotient_from_json(doc);
  } else if (kind == "results_table") {
    if (!is_completed_marker(doc)) results_record_from_json(doc);
  } else {
    throw Error(ErrorCode::kMalformed, "unknown document kind '" + kind + "'");
  }
  return doc;
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "graph";
  doc["vertices"] = g.vertex_ids();
  Json edges = Json::array();
  for (Edge e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    Json entry;
    entry["id"] = g.edge_id(e);
    entry["ends"] = Json::array({g.vertex_id(u), g.vertex_id(v)});
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

GraphPtr graph_from_json(const Json& doc) {
  expect_kind(doc, "graph");
  require_fields(doc, "graph document", {"format_version", "kind", "vertices", "edges"});
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw Error(ErrorCode::kMalformed, "graph vertices and edges must be arrays");
  }
  std::vector<std::string> vertices;
  for (const Json& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorCode::kMalformed, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> endpoints;
  std::vector<std::string> edge_ids;
  for (const Json& e : doc["edges"]) {
    require_fields(e, "edge entry", {"id", "ends"});
    std::string id = get_string(e, "id", "edge entry");
    if (!e["ends"].is_array() || e["ends"].size() != 2 || !e["ends"][0].is_string() ||
        !e["ends"][1].is_string()) {
      throw Error(ErrorCode::kMalformed, "edge '" + id + "' needs two endpoint ids");
    }
    edge_ids.push_back(id);
    endpoints.emplace_back(e["ends"][0].get<std::string>(), e["ends"][1].get<std::string>());
  }
  return std::make_shared<const Graph>(build_graph(vertices, endpoints, edge_ids));
}

Json scheme_to_json(const EmbeddingScheme& s) {
  const Graph& g = s.graph();
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "scheme";
  doc["graph"] = graph_to_json(g);
  Json rotations = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json entry;
    entry["vertex"] = g.vertex_id(v);
    Json order = Json::array();
    for (Dart d : s.rotation_at(v)) order.push_back(g.dart_id(d));
    entry["order"] = std::move(order);
    rotations.push_back(std::move(entry));
  }
  doc["rotations"] = std::move(rotations);
  Json signature = Json::array();
  for (Edge e = 0; e < g.edge_count(); ++e) {
    Json entry;
    entry["edge"] = g.edge_id(e);
    entry["sign"] = static_cast<int>(s.sign(e));
    signature.push_back(std::move(entry));
  }
  doc["signature"] = std::move(signature);
  return doc;
}

EmbeddingScheme scheme_from_json(const Json& doc) {
  expect_kind(doc, "scheme");
  require_fields(doc, "scheme document",
                 {"format_version", "kind", "graph", "rotations", "signature"});
  GraphPtr graph = graph_from_json(doc["graph"]);
  const Graph& g = *graph;
  auto vertices = vertex_index(g);
  auto edges = edge_index(g);

  if (!doc["rotations"].is_array()) {
    throw Error(ErrorCode::kMalformed, "scheme rotations must be an array");
  }
  std::vector<std::vector<Dart>> rotations(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for (const Json& entry : doc["rotations"]) {
    require_fields(entry, "rotation entry", {"vertex", "order"});
    std::string vid = get_string(entry, "vertex", "rotation entry");
    auto it = vertices.find(vid);
    if (it == vertices.end()) {
      throw Error(ErrorCode::kMalformed, "rotation names unknown vertex '" + vid + "'");
    }
    if (seen[it->second]) {
      throw Error(ErrorCode::kMalformed, "vertex '" + vid + "' has two rotations");
    }
    seen[it->second] = true;
    if (!entry["order"].is_array()) {
      throw Error(ErrorCode::kMalformed, "rotation order must be an array");
    }
    for (const Json& d : entry["order"]) {
      if (!d.is_string()) throw Error(ErrorCode::kMalformed, "dart ids must be strings");
      rotations[it->second].push_back(parse_dart_id(g, edges, d.get<std::string>()));
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v] && g.degree(v) > 0) {
      throw Error(ErrorCode::kMalformed, "vertex '" + g.vertex_id(v) + "' has no rotation");
    }
  }

  if (!doc["signature"].is_array()) {
    throw Error(ErrorCode::kMalformed, "scheme signature must be an array");
  }
  std::vector<std::int8_t> signature(g.edge_count(), 0);
  for (const Json& entry : doc["signature"]) {
    require_fields(entry, "signature entry", {"edge", "sign"});
    std::string eid = get_string(entry, "edge", "signature entry");
    auto it = edges.find(eid);
    if (it == edges.end()) {
      throw Error(ErrorCode::kMalformed, "signature names unknown edge '" + eid + "'");
    }
    if (signature[it->second] != 0) {
      throw Error(ErrorCode::kMalformed, "edge '" + eid + "' has two signs");
    }
    signature[it->second] = get_sign(entry["sign"], "edge sign");
  }
  for (Edge e = 0; e < g.edge_count(); ++e) {
    if (signature[e] == 0) {
      throw Error(ErrorCode::kMalformed, "edge '" + g.edge_id(e) + "' has no sign");
    }
  }
  return EmbeddingScheme(std::move(graph), rotations, std::move(signature));
}

Json cover_to_json(const CoverMap& c) {
  const Graph& t = c.total();
  const Graph& b = c.base();
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "cover";
  doc["total"] = graph_to_json(t);
  doc["base"] = graph_to_json(b);
  Json vertices = Json::array();
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    Json entry;
    entry["from"] = t.vertex_id(v);
    entry["to"] = b.vertex_id(c.vertex_image(v));
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  Json darts = Json::array();
  for (Dart d = 0; d < t.dart_count(); ++d) {
    Json entry;
    entry["from"] = t.dart_id(d);
    entry["to"] = b.dart_id(c.dart_image(d));
    darts.push_back(std::move(entry));
  }
  doc["darts"] = std::move(darts);
  return doc;
}

CoverMap cover_from_json(const Json& doc) {
  expect_kind(doc, "cover");
  require_fields(doc, "cover document",
                 {"format_version", "kind", "total", "base", "vertices", "darts"});
  GraphPtr total = graph_from_json(doc["total"]);
  GraphPtr base = graph_from_json(doc["base"]);
  std::vector<std::pair<std::string, std::string>> vertex_assignments;
  if (!doc["vertices"].is_array() || !doc["darts"].is_array()) {
    throw Error(ErrorCode::kMalformed, "cover maps must be arrays");
  }
  for (const Json& entry : doc["vertices"]) {
    require_fields(entry, "vertex assignment", {"from", "to"});
    vertex_assignments.emplace_back(get_string(entry, "from", "vertex assignment"),
                                    get_string(entry, "to", "vertex assignment"));
  }
  std::vector<std::pair<std::string, std::string>> dart_assignments;
  for (const Json& entry : doc["darts"]) {
    require_fields(entry, "dart assignment", {"from", "to"});
    dart_assignments.emplace_back(get_string(entry, "from", "dart assignment"),
                                  get_string(entry, "to", "dart assignment"));
  }
  return build_cover(std::move(total), std::move(base), vertex_assignments, dart_assignments);
}

Json signs_to_json(const Graph& total, const SignAssignment& signs) {
  if (signs.sign.size() != total.vertex_count()) {
    throw Error(ErrorCode::kPrecondition, "sign assignment does not fit the graph");
  }
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "signs";
  Json entries = Json::array();
  for (Vertex v = 0; v < total.vertex_count(); ++v) {
    Json entry;
    entry["vertex"] = total.vertex_id(v);
    entry["sign"] = static_cast<int>(signs.sign[v]);
    entries.push_back(std::move(entry));
  }
  doc["signs"] = std::move(entries);
  Json ambiguous = Json::array();
  for (Vertex v : signs.ambiguous) ambiguous.push_back(total.vertex_id(v));
  doc["ambiguous"] = std::move(ambiguous);
  return doc;
}

SignAssignment signs_from_json(const Json& doc, const Graph& total) {
  expect_kind(doc, "signs");
  require_fields(doc, "signs document", {"format_version", "kind", "signs", "ambiguous"});
  auto vertices = vertex_index(total);
  SignAssignment out;
  out.sign.assign(total.vertex_count(), 0);
  if (!doc["signs"].is_array() || !doc["ambiguous"].is_array()) {
    throw Error(ErrorCode::kMalformed, "signs and ambiguous must be arrays");
  }
  for (const Json& entry : doc["signs"]) {
    require_fields(entry, "sign entry", {"vertex", "sign"});
    std::string vid = get_string(entry, "vertex", "sign entry");
    auto it = vertices.find(vid);
    if (it == vertices.end()) {
      throw Error(ErrorCode::kMalformed, "sign entry names unknown vertex '" + vid + "'");
    }
    if (out.sign[it->second] != 0) {
      throw Error(ErrorCode::kMalformed, "vertex '" + vid + "' has two signs");
    }
    out.sign[it->second] = get_sign(entry["sign"], "vertex sign");
  }
  for (Vertex v = 0; v < total.vertex_count(); ++v) {
    if (out.sign[v] == 0) {
      throw Error(ErrorCode::kMalformed, "vertex '" + total.vertex_id(v) + "' has no sign");
    }
  }
  for (const Json& vid : doc["ambiguous"]) {
    if (!vid.is_string()) throw Error(ErrorCode::kMalformed, "ambiguous ids must be strings");
    auto it = vertices.find(vid.get<std::string>());
    if (it == vertices.end()) {
      throw Error(ErrorCode::kMalformed,
                  "ambiguous list names unknown vertex '" + vid.get<std::string>() + "'");
    }
    out.ambiguous.push_back(it->second);
  }
  std::sort(out.ambiguous.begin(), out.ambiguous.end());
  return out;
}

Json quotient_to_json(const QuotientReport& q) {
  if (!q.total_graph) {
    throw Error(ErrorCode::kPrecondition, "quotient report lacks its total graph");
  }
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "quotient_report";
  doc["scheme"] = scheme_to_json(q.scheme);
  doc["total"] = graph_to_json(*q.total_graph);
  doc["surface"] = q.surface.name();
  doc["sign_verdict"] = q.sign_verdict.name();
  doc["degree"] = q.degree;
  doc["windings"] = q.windings;
  Json faces = Json::array();
  for (const FaceWalk& walk : q.total_faces) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < walk.length(); ++i) {
      Json step;
      step["dart"] = q.total_graph->dart_id(walk.darts[i]);
      step["side"] = static_cast<int>(walk.signs[i]);
      steps.push_back(std::move(step));
    }
    faces.push_back(std::move(steps));
  }
  doc["total_faces"] = std::move(faces);
  return doc;
}

QuotientReport quotient_from_json(const Json& doc) {
  expect_kind(doc, "quotient_report");
  require_fields(doc, "quotient report", {"format_version", "kind", "scheme", "total", "surface",
                                          "sign_verdict", "degree", "windings", "total_faces"});
  EmbeddingScheme scheme = scheme_from_json(doc["scheme"]);
  SurfaceId surface = surface_from_name(get_string(doc, "surface", "quotient report"));
  SurfaceId verdict = surface_from_name(get_string(doc, "sign_verdict", "quotient report"));
  QuotientReport report(std::move(scheme), surface, verdict);
  report.total_graph = graph_from_json(doc["total"]);
  auto total_edges = edge_index(*report.total_graph);
  if (!doc["degree"].is_number_unsigned()) {
    throw Error(ErrorCode::kMalformed, "quotient degree must be a nonnegative integer");
  }
  report.degree = doc["degree"].get<std::uint32_t>();
  if (!doc["windings"].is_array()) {
    throw Error(ErrorCode::kMalformed, "windings must be an array");
  }
  for (const Json& w : doc["windings"]) {
    if (!w.is_number_unsigned()) throw Error(ErrorCode::kMalformed, "windings must be integers");
    report.windings.push_back(w.get<std::uint32_t>());
  }
  if (!doc["total_faces"].is_array()) {
    throw Error(ErrorCode::kMalformed, "total_faces must be an array");
  }
  for (const Json& face : doc["total_faces"]) {
    if (!face.is_array()) throw Error(ErrorCode::kMalformed, "each face must be an array");
    FaceWalk walk;
    for (const Json& step : face) {
      require_fields(step, "face step", {"dart", "side"});
      std::string id = get_string(step, "dart", "face step");
      walk.darts.push_back(parse_dart_id(*report.total_graph, total_edges, id));
      walk.signs.push_back(get_sign(step["side"], "face side"));
    }
    if (walk.darts.empty()) throw Error(ErrorCode::kMalformed, "face walks must not be empty");
    report.total_faces.push_back(std::move(walk));
  }
  if (report.windings.size() != report.total_faces.size()) {
    throw Error(ErrorCode::kMalformed, "one winding per total face required");
  }
  return report;
}

Json results_record_to_json(const ResultsRecord& r) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "results_table";
  doc["graph"] = r.graph;
  doc["degree"] = r.degree;
  doc["index"] = r.index;
  doc["planar"] = r.planar;
  doc["pev"] = r.pev;
  doc["surface"] = r.surface;
  doc["sphere_schemes"] = r.sphere_schemes;
  return doc;
}

ResultsRecord results_record_from_json(const Json& doc) {
  expect_kind(doc, "results_table");
  require_fields(doc, "results record", {"format_version", "kind", "graph", "degree", "index",
                                         "planar", "pev", "surface", "sphere_schemes"});
  ResultsRecord r;
  r.graph = get_string(doc, "graph", "results record");
  if (!doc["degree"].is_number_unsigned() || !doc["index"].is_number_unsigned() ||
      !doc["sphere_schemes"].is_number_unsigned() || !doc["planar"].is_boolean()) {
    throw Error(ErrorCode::kMalformed, "results record has wrongly typed fields");
  }
  r.degree = doc["degree"].get<std::uint32_t>();
  r.index = doc["index"].get<std::uint64_t>();
  r.planar = doc["planar"].get<bool>();
  r.pev = get_string(doc, "pev", "results record");
  if (r.pev != "found" && r.pev != "not-found" && r.pev != "out-of-budget") {
    throw Error(ErrorCode::kMalformed, "results record pev must be found/not-found/out-of-budget");
  }
  r.surface = get_string(doc, "surface", "results record");
  r.sphere_schemes = doc["sphere_schemes"].get<std::uint64_t>();
  return r;
}

Json results_completed_marker(const std::string& graph) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "results_table";
  doc["graph"] = graph;
  doc["event"] = "completed";
  return doc;
}

bool is_completed_marker(const Json& doc) {
  return doc.is_object() && doc.contains("event") && doc["event"] == "completed";
}

SurfaceId surface_from_name(const std::string& name) {
  if (name == "sphere") return SurfaceId{true, 0};
  if (name == "torus") return SurfaceId{true, 1};
  if (name == "projective-plane") return SurfaceId{false, 1};
  if (name == "klein-bottle") return SurfaceId{false, 2};
  auto parse_tail = [&](const std::string& prefix) -> int {
    std::size_t pos = prefix.size();
    if (name.size() <= pos) throw Error(ErrorCode::kMalformed, "bad surface name '" + name + "'");
    int value = 0;
    for (; pos < name.size(); ++pos) {
      if (name[pos] < '0' || name[pos] > '9') {
        throw Error(ErrorCode::kMalformed, "bad surface name '" + name + "'");
      }
      value = value * 10 + (name[pos] - '0');
    }
    return value;
  };
  if (name.rfind("genus-", 0) == 0) return SurfaceId{true, parse_tail("genus-")};
  if (name.rfind("crosscap-", 0) == 0) return SurfaceId{false, parse_tail("crosscap-")};
  throw Error(ErrorCode::kMalformed, "bad surface name '" + name + "'");
}

}  // namespace plancover
