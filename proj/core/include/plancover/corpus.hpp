#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plancover/cover.hpp"
#include "plancover/error.hpp"
#include "plancover/graph.hpp"
#include "plancover/negami.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

// Canonical labeled constructions used throughout the tests and the CLI.
GraphPtr k4();                            // vertices "1".."4"
GraphPtr q3();                            // cube, vertices "000".."111"
GraphPtr bouquet(std::uint32_t loops);    // one vertex, loops "a", "b", ...
GraphPtr cycle_graph(std::uint32_t n);    // vertices "1".."n", edges "c1".."cn"
GraphPtr k1222();                         // complete 4-partite (1,2,2,2)

// Lookup by name: "k4", "q3", "k1222", "bouquet<m>", "c<n>".
GraphPtr corpus_graph(const std::string& name);

// A planar scheme for k4 with four triangular faces.
EmbeddingScheme k4_planar_scheme();

// The identity cover of a graph.
CoverMap identity_cover(GraphPtr g);

// The cube double-covers k4 by identifying antipodal vertices.
CoverMap antipodal_cover_of_k4();

struct CoverWithScheme {
  CoverMap cover;
  EmbeddingScheme scheme;

  CoverWithScheme(CoverMap c, EmbeddingScheme s) : cover(std::move(c)), scheme(std::move(s)) {}
};

// A branched double cover of k4: two planar copies slit open at one vertex
// and cross-glued, so the merged vertex has local degree two.  Ships with the
// sphere scheme whose rotation at the merged vertex interleaves the sheets.
CoverWithScheme slit_double_cover_of_k4();

// Locally onto but not locally uniform: a three-vertex path covered by a
// claw, where the centre sees one base dart once and the other twice.
CoverMap weak_cover_example();

// A reconstructed example: name, the construction recipe, flags for violated
// input assumptions, and whatever objects plus certificate the search found.
struct CorpusEntry {
  std::string name;
  std::string note;
  std::vector<std::string> assumption_flags;
  std::optional<GraphPtr> graph;
  std::optional<CoverMap> cover;
  std::optional<EmbeddingScheme> scheme;
  std::optional<SignAssignment> signs;
};

// Searches out the example covers the corpus needs:
//   (a) an irregular planar triple cover of the two-loop bouquet satisfying
//       both conditions for some sphere embedding,
//   (b) connected planar double covers of k4 quotienting to the sphere and to
//       the projective plane,
//   (c) a planar cover of k4 failing both conditions for every sphere
//       embedding whose projective-plane embedding lifts to a sphere cover
//       satisfying them; double and triple covers are searched, and a miss is
//       recorded as an entry without a cover rather than invented.
std::vector<CorpusEntry> derived_examples(const Budget& budget = {});

struct HarnessOptions {
  std::uint32_t max_degree = 2;
  Budget cover_budget;      // caps the number of voltage assignments per degree
  Budget embedding_budget;  // caps each per-cover embedding sweep
  std::string results_path; // line-delimited records, appended in order
  bool resume = false;      // skip records already present in results_path
};

struct HarnessReport {
  std::uint64_t records_written = 0;
  std::uint64_t records_skipped = 0;  // already present when resuming
  bool completed = false;
};

// Systematic sweep: tree-normalized permutation voltages of every degree from
// 2 to max_degree, keeping connected covers, deciding planarity of each total
// graph, and running the embedding sweep for both conditions where the budget
// allows.  One record per connected cover, written as it is produced, plus a
// completion marker; rerunning with resume continues after the last record.
HarnessReport conjecture_harness(GraphPtr g, const std::string& graph_name,
                                 const HarnessOptions& opts);

}  // namespace plancover
