#pragma once

#include <cstdint>
#include <vector>

#include "plancover/cover.hpp"
#include "plancover/error.hpp"
#include "plancover/graph.hpp"

namespace plancover {

// A permutation of {0..n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);
  static Permutation transposition(std::uint32_t n, std::uint32_t a, std::uint32_t b);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation inverse() const;
  // Apply this first, then other: (this.then(p))(i) = p(this(i)).
  Permutation then(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

// All n! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> symmetric_group(std::uint32_t n);

// Voltages live on darts and invert under reversal, so traversing an edge
// backwards undoes its action on the fiber.
struct VoltageAssignment {
  std::uint32_t fiber_size = 0;
  std::vector<Permutation> dart_voltage;  // indexed by base dart
};

// Convenience: one voltage per edge, read along the edge's dart 0 -> dart 1
// direction; the reverse darts get the inverses.
VoltageAssignment voltages_from_edges(const Graph& base, std::uint32_t fiber_size,
                                      const std::vector<Permutation>& edge_voltage);

// The derived graph of a voltage assignment: vertices (v, i) named "<v>#<i>",
// edge copy i of e joining (u, i) to (v, alpha_e(i)), together with the
// projection.  The result is always an unbranched candidate of degree
// fiber_size; the total graph is connected exactly when the voltages act
// transitively on the fiber along closed walks.
CoverMap voltage_cover(GraphPtr base, const VoltageAssignment& alpha);

// Every connected double cover of a connected base, one per nonzero choice of
// signs on the cotree edges of a spanning tree (tree edges carry the
// identity).  That is 2^(E - V + 1) - 1 covers, pairwise non-isomorphic over
// the base.
std::vector<CoverMap> connected_double_covers(GraphPtr base, const Budget& budget = {});

}  // namespace plancover
