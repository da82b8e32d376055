// Command-line front end: interchange files in, verdicts / documents /
// diagrams out.  Exit codes: 0 success, 1 failed check or internal error,
// 2 malformed input or violated precondition, 3 budget exhausted.
// Structured error records go to stderr; stdout carries only results and is
// byte-identical for identical inputs and flags.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plancover/corpus.hpp"
#include "plancover/cover.hpp"
#include "plancover/dot_export.hpp"
#include "plancover/enumerate.hpp"
#include "plancover/interchange.hpp"
#include "plancover/lifting.hpp"
#include "plancover/negami.hpp"
#include "plancover/planarity.hpp"
#include "plancover/voltage.hpp"

namespace {

using namespace plancover;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed:
    case ErrorCode::kPrecondition:
      return 2;
    case ErrorCode::kBudget:
      return 3;
    case ErrorCode::kInternal:
      return 1;
  }
  return 1;
}

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "malformed";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kBudget: return "budget";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

void emit_error(ErrorCode code, const std::string& message) {
  Json record;
  record["format_version"] = kFormatVersion;
  record["kind"] = "error";
  record["code"] = code_name(code);
  record["message"] = message;
  std::cerr << emit_record(record);
}

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kMalformed, "cannot open input file: " + path);
    text << in.rdbuf();
  }
  return text.str();
}

Json load(const std::string& path) { return parse_document(read_input(path)); }

Json load_kind(const std::string& path, const std::string& kind) {
  Json doc = load(path);
  if (document_kind(doc) != kind) {
    throw Error(ErrorCode::kMalformed,
                path + ": expected a " + kind + " document, got " + document_kind(doc));
  }
  return doc;
}

// The per-run budget: --budget beats PLANCOVER_BUDGET beats the default.
Budget make_budget(std::uint64_t flag_value, bool flag_given) {
  Budget budget;
  if (flag_given) {
    budget.max_items = flag_value;
    return budget;
  }
  if (const char* env = std::getenv("PLANCOVER_BUDGET")) {
    try {
      budget.max_items = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformed, std::string("PLANCOVER_BUDGET is not a number: ") + env);
    }
  }
  return budget;
}

std::string signed_dart_text(const Graph& g, Dart d, int sign) {
  return g.dart_id(d) + (sign > 0 ? "+" : "-");
}

void print_face_walks(const EmbeddingScheme& s) {
  auto faces = s.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::cout << "face " << i << ":";
    for (std::size_t k = 0; k < faces[i].darts.size(); ++k) {
      std::cout << " " << signed_dart_text(s.graph(), faces[i].darts[k], faces[i].signs[k]);
    }
    std::cout << " (length " << faces[i].length() << ")\n";
  }
}

void print_witnesses(const std::vector<std::string>& witnesses) {
  for (const std::string& w : witnesses) std::cout << "witness: " << w << "\n";
}

// ---------------------------------------------------------------- validate

int run_validate(const std::string& path) {
  Json doc = load(path);
  const std::string kind = document_kind(doc);
  std::cout << "kind: " << kind << "\n";
  if (kind == "graph") {
    GraphPtr g = graph_from_json(doc);
    AssumptionsReport report = validate_assumptions(*g);
    std::cout << "vertices: " << g->vertex_count() << "\n";
    std::cout << "edges: " << g->edge_count() << "\n";
    std::cout << "connected: " << (report.connected ? "yes" : "no") << "\n";
    std::cout << "loops:";
    for (Edge e : report.loops) std::cout << " " << g->edge_id(e);
    std::cout << "\n";
    std::cout << "parallel pairs:";
    for (auto [a, b] : report.parallels) {
      std::cout << " " << g->edge_id(a) << "/" << g->edge_id(b);
    }
    std::cout << "\n";
    std::cout << "assumptions: " << (report.pass() ? "pass" : "fail") << "\n";
    return report.pass() ? 0 : 1;
  }
  if (kind == "scheme") {
    EmbeddingScheme s = scheme_from_json(doc);
    std::cout << "surface: " << s.surface_id().name() << "\n";
    AssumptionsReport report = validate_assumptions(s.graph());
    std::cout << "assumptions: " << (report.pass() ? "pass" : "fail") << "\n";
    return report.pass() ? 0 : 1;
  }
  if (kind == "cover") {
    CoverMap f = cover_from_json(doc);
    CoverClass cls = classify(f);
    std::cout << "cover: " << to_string(cls.kind) << "\n";
    print_witnesses(cls.witnesses);
    return cls.is_cover() ? 0 : 1;
  }
  // signs / quotient_report / results_table lines parse-check only.
  std::cout << "assumptions: pass\n";
  return 0;
}

// ------------------------------------------------------------------- cover

CoverMap load_cover(const std::string& path) { return cover_from_json(load_kind(path, "cover")); }

int run_cover_classify(const std::string& path) {
  CoverMap f = load_cover(path);
  CoverClass cls = classify(f);
  std::cout << "kind: " << to_string(cls.kind) << "\n";
  if (cls.is_cover()) std::cout << "degree: " << cls.degree << "\n";
  std::cout << "singular vertices:";
  for (Vertex v : cls.singular_vertices) {
    std::cout << " " << f.total().vertex_id(v) << "(" << cls.local_degrees[v] << ")";
  }
  std::cout << "\n";
  print_witnesses(cls.witnesses);
  return cls.is_cover() ? 0 : 1;
}

int run_cover_deck(const std::string& path, const Budget& budget) {
  CoverMap f = load_cover(path);
  DeckGroup deck = deck_group(f, budget);
  std::cout << "deck group order: " << deck.order() << "\n";
  for (std::size_t i = 0; i < deck.elements.size(); ++i) {
    std::cout << "element " << i << ":";
    for (Vertex v = 0; v < f.total().vertex_count(); ++v) {
      std::cout << " " << f.total().vertex_id(v) << "->"
                << f.total().vertex_id(deck.elements[i].vertex_map[v]);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_cover_regular(const std::string& path, const Budget& budget) {
  CoverMap f = load_cover(path);
  bool regular = is_regular(f, deck_group(f, budget));
  std::cout << (regular ? "regular" : "irregular") << "\n";
  return regular ? 0 : 1;
}

// ------------------------------------------------------------------- embed

int run_embed_faces(const std::string& path) {
  EmbeddingScheme s = scheme_from_json(load_kind(path, "scheme"));
  print_face_walks(s);
  return 0;
}

int run_embed_surface(const std::string& path) {
  EmbeddingScheme s = scheme_from_json(load_kind(path, "scheme"));
  SurfaceId surface = s.surface_id();
  std::cout << "euler characteristic: " << s.euler_characteristic() << "\n";
  std::cout << "orientable: " << (surface.orientable ? "yes" : "no") << "\n";
  std::cout << "surface: " << surface.name() << "\n";
  return 0;
}

int run_embed_planar(const std::string& path) {
  GraphPtr g = graph_from_json(load_kind(path, "graph"));
  std::optional<EmbeddingScheme> s = planar_embed(g);
  if (!s) {
    std::cout << "non-planar\n";
    return 1;
  }
  std::cout << emit_document(scheme_to_json(*s));
  return 0;
}

// ------------------------------------------------------------------ negami

// The scheme file must describe an embedding of the cover's total graph.
EmbeddingScheme load_total_scheme(const CoverMap& f, const std::string& path) {
  EmbeddingScheme s = scheme_from_json(load_kind(path, "scheme"));
  if (!s.graph().same_structure(f.total())) {
    throw Error(ErrorCode::kMalformed, path + ": scheme graph is not the cover's total graph");
  }
  return s;
}

int run_negami_check(const std::string& cover_path, const std::string& scheme_path,
                     bool all_embeddings, bool strict_pv, const Budget& budget) {
  CoverMap f = load_cover(cover_path);
  PevSearchOptions opts;
  opts.pv.strict = strict_pv;
  opts.budget = budget;
  if (all_embeddings) {
    PevSearchResult r = check_pev_any_embedding(f, opts);
    std::cout << "rotation systems: " << r.rotation_systems << "\n";
    std::cout << "sphere schemes: " << r.sphere_schemes << "\n";
    if (!r.found) {
      std::cout << "PEV fails for every sphere embedding\n";
      return 1;
    }
    QuotientReport q = quotient_embedding(f, r.certificate->scheme, r.certificate->signs);
    std::cout << "PEV holds, surface " << q.surface.name() << "\n";
    return 0;
  }
  EmbeddingScheme s = load_total_scheme(f, scheme_path);
  PropertyVReport pv = check_property_v(f, s, opts.pv);
  if (!pv.holds) {
    print_witnesses(pv.witnesses);
    std::cout << "PEV fails (vertex condition)\n";
    return 1;
  }
  std::cout << "vertex condition holds\n";
  PropertyESearch es = search_property_e(f, pv, budget);
  if (!es.found) {
    std::cout << "sign assignments tried: " << es.assignments_tried << "\n";
    std::cout << "PEV fails (edge condition)\n";
    return 1;
  }
  std::cout << "edge condition holds\n";
  QuotientReport q = quotient_embedding(f, s, *es.signs);
  std::cout << "PEV holds, surface " << q.surface.name() << "\n";
  return 0;
}

int run_negami_quotient(const std::string& cover_path, const std::string& scheme_path,
                        const std::string& signs_path, bool strict_pv, const Budget& budget) {
  CoverMap f = load_cover(cover_path);
  EmbeddingScheme s = load_total_scheme(f, scheme_path);
  PropertyVOptions pv_opts;
  pv_opts.strict = strict_pv;
  PropertyVReport pv = check_property_v(f, s, pv_opts);
  if (!pv.holds) {
    print_witnesses(pv.witnesses);
    std::cout << "PEV fails (vertex condition)\n";
    return 1;
  }
  std::optional<SignAssignment> signs;
  if (!signs_path.empty()) {
    signs = signs_from_json(load_kind(signs_path, "signs"), f.total());
    if (!signs_valid(f, pv, signs->sign)) {
      throw Error(ErrorCode::kPrecondition, "sign file disagrees with the alignment data");
    }
    if (!check_property_e(f, *signs).holds) {
      std::cout << "PEV fails (edge condition)\n";
      return 1;
    }
  } else {
    PropertyESearch es = search_property_e(f, pv, budget);
    if (!es.found) {
      std::cout << "PEV fails (edge condition)\n";
      return 1;
    }
    signs = std::move(es.signs);
  }
  QuotientReport q = quotient_embedding(f, s, *signs);
  std::cout << emit_document(quotient_to_json(q));
  return 0;
}

// -------------------------------------------------------------------- lift

int run_lift_odc(const std::string& scheme_path, bool emit_cover) {
  EmbeddingScheme s = scheme_from_json(load_kind(scheme_path, "scheme"));
  OrientationDoubleCover odc = orientation_double_cover(s);
  if (emit_cover) {
    std::cout << emit_document(cover_to_json(odc.projection));
  } else {
    std::cout << emit_document(scheme_to_json(odc.lifted_scheme));
  }
  std::cerr << "lifted graph connected: " << (odc.connected ? "yes" : "no") << "\n";
  return 0;
}

int run_lift_factor(const std::string& cover_path, const std::string& scheme_path,
                    const Budget& budget) {
  CoverMap f = load_cover(cover_path);
  EmbeddingScheme s = load_total_scheme(f, scheme_path);
  PropertyVReport pv = check_property_v(f, s);
  if (!pv.holds) {
    print_witnesses(pv.witnesses);
    std::cout << "PEV fails (vertex condition)\n";
    return 1;
  }
  PropertyESearch es = search_property_e(f, pv, budget);
  if (!es.found) {
    std::cout << "PEV fails (edge condition)\n";
    return 1;
  }
  QuotientReport q = quotient_embedding(f, s, *es.signs);
  FactorThroughUniversal factored = factor_through_universal(f, q, *es.signs);
  CoverMap recomposed = compose_covers(factored.odc.projection, factored.lift);
  bool exact = recomposed.vertex_map() == f.vertex_map() && recomposed.dart_map() == f.dart_map();
  if (!exact) throw Error(ErrorCode::kInternal, "projection after lift is not the original cover");
  std::cout << "quotient surface: " << q.surface.name() << "\n";
  std::cout << "lift degree: " << classify(factored.lift).degree << "\n";
  std::cout << "projection after lift equals the cover: yes\n";
  return 0;
}

int run_lift_pipeline(const std::string& f_path, const std::string& ftilde_path,
                      const std::string& scheme_path, const Budget& budget) {
  CoverMap f = load_cover(f_path);
  CoverMap ftilde = load_cover(ftilde_path);
  EmbeddingScheme s = load_total_scheme(ftilde, scheme_path);
  PevSearchOptions opts;
  opts.budget = budget;
  NecessityResult result = necessity_pipeline(f, ftilde, s, opts);
  std::cout << "middle surface: " << result.middle->surface.name() << "\n";
  std::cout << "case: " << result.case_number() << "\n";
  if (result.case1) {
    std::cout << "induced scheme worked: " << (result.case1->induced_scheme_worked ? "yes" : "no")
              << "\n";
  } else {
    std::cout << "lifted cover degree: " << classify(result.case2->lifted_cover).degree << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------- gen

int run_gen_graph(const std::string& name) {
  std::cout << emit_document(graph_to_json(*corpus_graph(name)));
  return 0;
}

int run_gen_double_covers(const std::string& name, const Budget& budget) {
  for (const CoverMap& f : connected_double_covers(corpus_graph(name), budget)) {
    std::cout << emit_record(cover_to_json(f));
  }
  return 0;
}

int run_gen_examples(const std::string& out_dir, const Budget& budget) {
  std::vector<CorpusEntry> entries = derived_examples(budget);
  for (const CorpusEntry& e : entries) {
    std::cout << "example: " << e.name << "\n";
    std::cout << "  note: " << e.note << "\n";
    for (const std::string& flag : e.assumption_flags) {
      std::cout << "  assumption violated: " << flag << "\n";
    }
    std::cout << "  objects:";
    if (e.graph) std::cout << " graph";
    if (e.cover) std::cout << " cover";
    if (e.scheme) std::cout << " scheme";
    if (e.signs) std::cout << " signs";
    std::cout << "\n";
    if (out_dir.empty()) continue;
    std::filesystem::create_directories(out_dir);
    auto write_doc = [&](const std::string& suffix, const Json& doc) {
      std::ofstream out(out_dir + "/" + e.name + "." + suffix + ".json");
      out << emit_document(doc);
    };
    if (e.graph) write_doc("graph", graph_to_json(**e.graph));
    if (e.cover) write_doc("cover", cover_to_json(*e.cover));
    if (e.scheme) write_doc("scheme", scheme_to_json(*e.scheme));
    if (e.cover && e.signs) {
      write_doc("signs", signs_to_json(e.cover->total(), *e.signs));
    }
  }
  return 0;
}

// ------------------------------------------------------------------ search

int run_search_conjecture(const std::string& graph_name, std::uint32_t max_degree,
                          const std::string& out_path, bool resume, const Budget& budget) {
  HarnessOptions opts;
  opts.max_degree = max_degree;
  opts.cover_budget = budget;
  opts.embedding_budget = budget;
  opts.results_path = out_path;
  opts.resume = resume;
  HarnessReport report = conjecture_harness(corpus_graph(graph_name), graph_name, opts);
  std::cout << "records written: " << report.records_written << "\n";
  std::cout << "records skipped: " << report.records_skipped << "\n";
  std::cout << "completed: " << (report.completed ? "yes" : "no") << "\n";
  return 0;
}

// ------------------------------------------------------------------ export

int run_export_dot(const std::string& path) {
  Json doc = load(path);
  const std::string kind = document_kind(doc);
  if (kind == "graph") {
    std::cout << graph_to_dot(*graph_from_json(doc));
    return 0;
  }
  if (kind == "scheme") {
    std::cout << scheme_to_dot(scheme_from_json(doc));
    return 0;
  }
  throw Error(ErrorCode::kMalformed, "dot export takes a graph or scheme document, got " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite graph covers, sphere embeddings, and induced quotient embeddings"};
  app.fallthrough();  // global flags may follow the subcommand
  app.require_subcommand(1);

  std::uint64_t budget_items = 0;
  CLI::Option* budget_opt =
      app.add_option("--budget", budget_items,
                     "Work budget (items); overrides PLANCOVER_BUDGET");

  std::string in_path, cover_path, scheme_path, signs_path, f_path, ftilde_path;
  std::string name, out_dir, out_path;
  bool all_embeddings = false, strict_pv = false, emit_cover = false, resume = false;
  std::uint32_t max_degree = 2;

  CLI::App* validate = app.add_subcommand("validate", "Validate a document and report assumptions");
  validate->add_option("file", in_path, "Interchange document (- for stdin)")->required();

  CLI::App* cover = app.add_subcommand("cover", "Classify covers and their deck groups");
  cover->require_subcommand(1);
  CLI::App* cover_classify = cover->add_subcommand("classify", "Cover kind, degree, branching");
  cover_classify->add_option("file", cover_path, "Cover document")->required();
  CLI::App* cover_deck = cover->add_subcommand("deck", "Deck transformation group");
  cover_deck->add_option("file", cover_path, "Cover document")->required();
  CLI::App* cover_regular = cover->add_subcommand("regular", "Deck-transitivity on fibers");
  cover_regular->add_option("file", cover_path, "Cover document")->required();

  CLI::App* embed = app.add_subcommand("embed", "Faces, surfaces and planar embeddings");
  embed->require_subcommand(1);
  CLI::App* embed_faces = embed->add_subcommand("faces", "Face boundary walks of a scheme");
  embed_faces->add_option("file", scheme_path, "Scheme document")->required();
  CLI::App* embed_surface = embed->add_subcommand("surface", "Surface of a scheme");
  embed_surface->add_option("file", scheme_path, "Scheme document")->required();
  CLI::App* embed_planar = embed->add_subcommand("planar", "Sphere scheme or non-planar verdict");
  embed_planar->add_option("file", in_path, "Graph document")->required();

  CLI::App* negami = app.add_subcommand("negami", "Vertex/edge conditions and quotient embeddings");
  negami->require_subcommand(1);
  CLI::App* negami_check = negami->add_subcommand("check", "Decide both conditions");
  negami_check->add_option("--cover", cover_path, "Cover document")->required();
  CLI::Option* scheme_opt = negami_check->add_option("--scheme", scheme_path, "Scheme document");
  negami_check->add_flag("--all-embeddings", all_embeddings,
                         "Sweep every sphere embedding of the total graph");
  negami_check->add_flag("--strict-pv", strict_pv,
                         "Require aligned (not reversed) projected rotations");
  CLI::App* negami_quotient = negami->add_subcommand("quotient", "Emit the induced embedding");
  negami_quotient->add_option("--cover", cover_path, "Cover document")->required();
  negami_quotient->add_option("--scheme", scheme_path, "Scheme document")->required();
  negami_quotient->add_option("--signs", signs_path, "Sign document (searched when omitted)");
  negami_quotient->add_flag("--strict-pv", strict_pv,
                            "Require aligned (not reversed) projected rotations");

  CLI::App* lift = app.add_subcommand("lift", "Orientation double covers and factorizations");
  lift->require_subcommand(1);
  CLI::App* lift_odc = lift->add_subcommand("odc", "Orientation double cover of a scheme");
  lift_odc->add_option("--scheme", scheme_path, "Scheme document")->required();
  lift_odc->add_flag("--emit-cover", emit_cover, "Emit the projection instead of the scheme");
  CLI::App* lift_factor = lift->add_subcommand("factor", "Factor through the double cover");
  lift_factor->add_option("--cover", cover_path, "Cover document")->required();
  lift_factor->add_option("--scheme", scheme_path, "Scheme document")->required();
  CLI::App* lift_pipeline = lift->add_subcommand("pipeline", "Two-step necessity argument");
  lift_pipeline->add_option("--f", f_path, "Outer cover document")->required();
  lift_pipeline->add_option("--ftilde", ftilde_path, "Inner cover document")->required();
  lift_pipeline->add_option("--scheme", scheme_path, "Scheme on the inner total graph")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate corpus graphs, covers and examples");
  gen->require_subcommand(1);
  CLI::App* gen_graph = gen->add_subcommand("graph", "Named graph: k4, q3, k1222, bouquet<m>, c<n>");
  gen_graph->add_option("name", name, "Graph name")->required();
  CLI::App* gen_doubles = gen->add_subcommand("double-covers", "Connected double covers");
  gen_doubles->add_option("name", name, "Base graph name")->required();
  CLI::App* gen_examples = gen->add_subcommand("examples", "Search out the derived examples");
  gen_examples->add_option("--out-dir", out_dir, "Write objects as documents here");

  CLI::App* search = app.add_subcommand("search", "Systematic sweeps");
  search->require_subcommand(1);
  CLI::App* search_conj = search->add_subcommand("conjecture", "Sweep covers of a base graph");
  search_conj->add_option("--graph", name, "Base graph name")->required();
  search_conj->add_option("--max-degree", max_degree, "Largest cover degree");
  search_conj->add_option("--out", out_path, "Results file (line-delimited records)")->required();
  search_conj->add_flag("--resume", resume, "Continue after existing records");

  CLI::App* exp = app.add_subcommand("export", "Diagram export");
  exp->require_subcommand(1);
  CLI::App* export_dot = exp->add_subcommand("dot", "Graph or scheme as dot text");
  export_dot->add_option("file", in_path, "Graph or scheme document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Budget budget = make_budget(budget_items, budget_opt->count() > 0);
    if (validate->parsed()) return run_validate(in_path);
    if (cover_classify->parsed()) return run_cover_classify(cover_path);
    if (cover_deck->parsed()) return run_cover_deck(cover_path, budget);
    if (cover_regular->parsed()) return run_cover_regular(cover_path, budget);
    if (embed_faces->parsed()) return run_embed_faces(scheme_path);
    if (embed_surface->parsed()) return run_embed_surface(scheme_path);
    if (embed_planar->parsed()) return run_embed_planar(in_path);
    if (negami_check->parsed()) {
      if (!all_embeddings && scheme_opt->count() == 0) {
        throw Error(ErrorCode::kMalformed, "negami check needs --scheme or --all-embeddings");
      }
      return run_negami_check(cover_path, scheme_path, all_embeddings, strict_pv, budget);
    }
    if (negami_quotient->parsed()) {
      return run_negami_quotient(cover_path, scheme_path, signs_path, strict_pv, budget);
    }
    if (lift_odc->parsed()) return run_lift_odc(scheme_path, emit_cover);
    if (lift_factor->parsed()) return run_lift_factor(cover_path, scheme_path, budget);
    if (lift_pipeline->parsed()) return run_lift_pipeline(f_path, ftilde_path, scheme_path, budget);
    if (gen_graph->parsed()) return run_gen_graph(name);
    if (gen_doubles->parsed()) return run_gen_double_covers(name, budget);
    if (gen_examples->parsed()) return run_gen_examples(out_dir, budget);
    if (search_conj->parsed()) {
      return run_search_conjecture(name, max_degree, out_path, resume, budget);
    }
    if (export_dot->parsed()) return run_export_dot(in_path);
    throw Error(ErrorCode::kMalformed, "no subcommand selected");
  } catch (const Error& e) {
    emit_error(e.code(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit_error(ErrorCode::kInternal, e.what());
    return 1;
  }
}
