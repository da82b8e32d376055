#pragma once

#include <optional>

#include "plancover/cover.hpp"
#include "plancover/negami.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

// The orientation double cover of an embedding scheme: two signed copies
// "<id>+" and "<id>-" of every vertex and edge, carrying an all-positive
// scheme whose Euler characteristic is twice the base's.  The lifted graph is
// connected exactly when the base scheme is non-orientable.
struct OrientationDoubleCover {
  EmbeddingScheme lifted_scheme;  // all-positive, on the lifted graph
  CoverMap projection;            // lifted graph -> base graph, degree 2
  bool connected = false;

  OrientationDoubleCover(EmbeddingScheme s, CoverMap p, bool c)
      : lifted_scheme(std::move(s)), projection(std::move(p)), connected(c) {}
};

// Requires a connected base graph.
OrientationDoubleCover orientation_double_cover(const EmbeddingScheme& s);

struct FactorThroughUniversal {
  OrientationDoubleCover odc;  // of the quotient scheme
  CoverMap lift;               // total graph -> lifted quotient graph

  FactorThroughUniversal(OrientationDoubleCover o, CoverMap l)
      : odc(std::move(o)), lift(std::move(l)) {}
};

// Factors a cover through the orientation double cover of its induced
// projective-plane embedding: every total vertex goes to the copy of its
// image named by its sign, and the projection composed with the lift gives
// back the original cover map exactly.  Rejects sphere quotients (there the
// double cover splits) and sign data that does not belong to the quotient.
FactorThroughUniversal factor_through_universal(const CoverMap& c, const QuotientReport& q,
                                                const SignAssignment& signs);

struct NecessityCase1 {
  EmbeddingScheme scheme;      // sphere scheme on the middle graph
  PevCertificate certificate;  // both conditions for the outer cover
  // True when the certificate uses the induced scheme itself; false when a
  // sweep over all sphere schemes had to supply a different one.
  bool induced_scheme_worked = true;

  NecessityCase1(EmbeddingScheme s, PevCertificate c, bool direct)
      : scheme(std::move(s)), certificate(std::move(c)), induced_scheme_worked(direct) {}
};

struct NecessityCase2 {
  OrientationDoubleCover odc;  // of the projective-plane middle scheme
  CoverMap lifted_cover;       // outer cover composed with the odc projection
  PevCertificate certificate;  // both conditions for lifted_cover

  NecessityCase2(OrientationDoubleCover o, CoverMap l, PevCertificate c)
      : odc(std::move(o)), lifted_cover(std::move(l)), certificate(std::move(c)) {}
};

struct NecessityResult {
  std::optional<QuotientReport> middle;  // induced embedding of the middle graph
  std::optional<NecessityCase1> case1;
  std::optional<NecessityCase2> case2;

  int case_number() const { return case1 ? 1 : 2; }
};

// Given an unbranched cover f of the base by the middle graph, a cover
// f_tilde of the middle graph, and a sphere scheme s on f_tilde's total graph
// under which the composite f after f_tilde satisfies both conditions: the
// middle graph inherits an embedding in the sphere or the projective plane.
// In the sphere case f itself satisfies both conditions for some sphere
// scheme (case 1); in the projective-plane case the composite of f with the
// orientation double cover projection does (case 2).  Every consequence is
// verified, not assumed; failures raise internal errors.
NecessityResult necessity_pipeline(const CoverMap& f, const CoverMap& f_tilde,
                                   const EmbeddingScheme& s, const PevSearchOptions& opts = {});

// Does some isomorphism between the covers carry the first scheme to the
// second, matching either all rotations or all reversed rotations?
bool schemes_cover_isomorphic(const CoverMap& a, const EmbeddingScheme& sa, const CoverMap& b,
                              const EmbeddingScheme& sb, const Budget& budget = {});

}  // namespace plancover
