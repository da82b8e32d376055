#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "plancover/cover.hpp"
#include "plancover/graph.hpp"
#include "plancover/negami.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

// Interchange documents are versioned JSON with explicit ids everywhere, so
// certificates stay diffable and re-verifiable.  Emission order is fixed;
// identical data gives byte-identical text.  Parsing validates the shape and
// rejects unknown fields.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Pretty two-space document, newline terminated.
std::string emit_document(const Json& doc);
// Single-line record for line-delimited tables, newline terminated.
std::string emit_record(const Json& doc);

// Parse and validate any document; throws kMalformed with a reason.
Json parse_document(const std::string& text);
std::string document_kind(const Json& doc);

Json graph_to_json(const Graph& g);
GraphPtr graph_from_json(const Json& doc);

Json scheme_to_json(const EmbeddingScheme& s);
EmbeddingScheme scheme_from_json(const Json& doc);

Json cover_to_json(const CoverMap& c);
CoverMap cover_from_json(const Json& doc);

// Signs refer to the total graph of a cover, passed alongside.
Json signs_to_json(const Graph& total, const SignAssignment& signs);
SignAssignment signs_from_json(const Json& doc, const Graph& total);

Json quotient_to_json(const QuotientReport& q);
QuotientReport quotient_from_json(const Json& doc);

// One line of a search results table.
struct ResultsRecord {
  std::string graph;
  std::uint32_t degree = 0;
  std::uint64_t index = 0;  // voltage assignment index within the degree
  bool planar = false;
  std::string pev;      // "found" | "not-found" | "out-of-budget"
  std::string surface;  // quotient surface name when pev == "found"
  std::uint64_t sphere_schemes = 0;

  friend bool operator==(const ResultsRecord&, const ResultsRecord&) = default;
};

Json results_record_to_json(const ResultsRecord& r);
ResultsRecord results_record_from_json(const Json& doc);
// Marker line closing a completed sweep.
Json results_completed_marker(const std::string& graph);
bool is_completed_marker(const Json& doc);

SurfaceId surface_from_name(const std::string& name);

}  // namespace plancover
