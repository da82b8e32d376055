#pragma once

#include <functional>

#include "plancover/error.hpp"
#include "plancover/scheme.hpp"

namespace plancover {

struct SchemeEnumOptions {
  // Also vary edge signs.  Signs on a fixed spanning tree stay +1 (vertex
  // flips can always arrange that), so every embedding still shows up.
  bool vary_signature = false;
  Budget budget;
};

// Visits every rotation system (times every cotree signature when requested)
// in lexicographic order: per vertex the darts are permuted behind a fixed
// smallest first dart, so each cyclic order appears exactly once.  The visit
// callback returns false to stop early.  Returns the number of schemes
// visited.  Throws BudgetExceeded up front when the total count would exceed
// the budget.
std::uint64_t enumerate_rotation_systems(GraphPtr graph, const SchemeEnumOptions& opts,
                                         const std::function<bool(const EmbeddingScheme&)>& visit);

// Total schemes the enumeration would visit; saturates at uint64 max.
std::uint64_t count_rotation_systems(const Graph& graph, bool vary_signature);

}  // namespace plancover
