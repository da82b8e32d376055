#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plancover/cover.hpp"
#include "plancover/error.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

// The cyclic order a sphere embedding of the total graph induces around a
// base vertex, read off by projecting the rotation at any preimage.
struct InducedOrder {
  Vertex base_vertex = kNoVertex;
  std::vector<Dart> order;       // base darts, rotated to start at the smallest
  bool ambiguous = false;        // the order equals its own reversal cyclically
  std::vector<Vertex> fiber;     // preimages of base_vertex, ascending
  // Per fiber entry: +1 when its projected rotation matches `order`, -1 when
  // it matches the reversal, 0 when the two readings coincide (ambiguous).
  std::vector<std::int8_t> alignment;
};

struct PropertyVOptions {
  // Reject preimages whose projected rotation matches only the reversal of
  // the reference order.  The default accepts either sense, tracking it in
  // the alignment data.
  bool strict = false;
};

struct PropertyVReport {
  bool holds = false;
  std::vector<InducedOrder> orders;      // indexed by base vertex
  std::vector<std::string> witnesses;    // failures, with dart-level detail
};

// Does every preimage of every base vertex see the same cyclic order of base
// darts (up to sense), repeated local-degree many times?  The scheme must be
// a sphere scheme on the total graph of a (possibly branched) cover; it is
// normalized internally, so any orientable signature with Euler
// characteristic 2 is accepted.
PropertyVReport check_property_v(const CoverMap& f, const EmbeddingScheme& s,
                                 const PropertyVOptions& opts = {});

// One sign per total vertex: +1 for preimages aligned with their fiber's
// reference sense, -1 for reversed ones, with ambiguous preimages listed for
// later resolution.
struct SignAssignment {
  std::vector<std::int8_t> sign;   // per total vertex
  std::vector<Vertex> ambiguous;   // total vertices whose sign is a free choice
};

// Signs from the alignment data.  base_sign optionally gives each fiber's
// designated preimage (its smallest member) a sign; entries default to +1.
// Flipping a whole fiber is a gauge move, so these choices never change any
// downstream verdict.
SignAssignment assign_signs(const CoverMap& f, const PropertyVReport& pv,
                            const std::vector<std::int8_t>& base_sign = {});

// Does `sign` respect the alignment data, i.e. agree inside every fiber up to
// one overall flip?  Ambiguous fibers accept anything.
bool signs_valid(const CoverMap& f, const PropertyVReport& pv,
                 const std::vector<std::int8_t>& sign);

struct PropertyEReport {
  bool holds = false;
  std::vector<std::int8_t> edge_sign;  // per base edge, when holds
  std::vector<std::string> witnesses;
};

// Do all lifts of each base edge agree on the product of their endpoint
// signs?  The common products become the signature of the quotient scheme.
PropertyEReport check_property_e(const CoverMap& f, const SignAssignment& signs);

struct PropertyESearch {
  bool found = false;
  std::optional<SignAssignment> signs;  // first satisfying assignment
  std::optional<PropertyEReport> report;
  std::uint64_t assignments_tried = 0;
};

// Tries sign resolutions for the ambiguous preimages until one satisfies the
// edge condition.  Whole-fiber flips are gauge moves, so one representative
// per ambiguous fiber stays pinned; the remaining choices are enumerated
// lexicographically, +1 before -1.
PropertyESearch search_property_e(const CoverMap& f, const PropertyVReport& pv,
                                  const Budget& budget = {});

// Sphere when no vertex fiber carries both signs, projective plane when every
// vertex fiber does.  Anything in between contradicts the edge condition, so
// it is reported as an internal error.
SurfaceId surface_from_signs(const CoverMap& f, const SignAssignment& signs);

// The embedding of the base graph induced by a sphere embedding of the total
// graph whose signs satisfy the edge condition.
struct QuotientReport {
  EmbeddingScheme scheme;                // on the base graph
  SurfaceId surface;                     // from face tracing the scheme
  SurfaceId sign_verdict;                // from the mixed-fiber dichotomy
  std::vector<std::uint32_t> windings;   // per face of the total scheme
  std::vector<FaceWalk> total_faces;     // the faces those windings refer to
  GraphPtr total_graph;                  // the graph those faces live on
  std::uint32_t degree = 0;

  QuotientReport(EmbeddingScheme s, SurfaceId surf, SurfaceId verdict)
      : scheme(std::move(s)), surface(surf), sign_verdict(verdict) {}
};

// Builds the quotient scheme (rotations from plus-signed preimages, edge
// signs from the lift products), names its surface, and cross-checks
// everything that must hold: the two surface verdicts agree, every face of
// the total scheme projects onto a face of the quotient with an integer
// winding, windings over each quotient face sum to the degree, and the Euler
// characteristics balance against the branching data.  Violations throw
// internal errors rather than degrade the report.
QuotientReport quotient_embedding(const CoverMap& f, const EmbeddingScheme& s,
                                  const SignAssignment& signs);

// A sphere scheme on the total graph together with the data certifying that
// both vertex and edge conditions hold.
struct PevCertificate {
  EmbeddingScheme scheme;
  PropertyVReport pv;
  SignAssignment signs;
  PropertyEReport pe;

  PevCertificate(EmbeddingScheme s, PropertyVReport v, SignAssignment sg, PropertyEReport e)
      : scheme(std::move(s)), pv(std::move(v)), signs(std::move(sg)), pe(std::move(e)) {}
};

struct PevSearchOptions {
  PropertyVOptions pv;
  Budget budget;
};

struct PevSearchResult {
  bool found = false;
  std::optional<PevCertificate> certificate;
  std::uint64_t rotation_systems = 0;   // enumerated in total
  std::uint64_t sphere_schemes = 0;     // of those, Euler characteristic 2
};

// Deterministic sweep over all rotation systems of the total graph (positive
// signature), keeping sphere schemes and returning the first one whose vertex
// and edge conditions both hold.  Exhaustion without a hit is a certified
// negative within the budget.
PevSearchResult check_pev_any_embedding(const CoverMap& f, const PevSearchOptions& opts = {});

struct EquivariantSearchResult {
  bool found = false;
  std::optional<EmbeddingScheme> scheme;          // sphere scheme on the total graph
  std::optional<PevCertificate> certificate;      // the conditions follow; verified anyway
  std::uint64_t rotation_systems = 0;
  std::uint64_t sphere_schemes = 0;
};

// For a regular cover: searches for a sphere scheme on which every deck
// transformation acts by rotation-preserving or rotation-reversing scheme
// maps.  When one exists the vertex and edge conditions must hold for it;
// that implication is asserted, not assumed.
EquivariantSearchResult equivariant_embedding_search(const CoverMap& f,
                                                     const PevSearchOptions& opts = {});

}  // namespace plancover
