#pragma once

#include <cstdint>

namespace plancover {

// Dense internal handles.  A graph with m edges owns darts 0..2m-1; the two
// darts of edge e are 2e and 2e+1, swapped by reverse_dart.
using Vertex = std::uint32_t;
using Edge = std::uint32_t;
using Dart = std::uint32_t;

inline constexpr Dart kNoDart = static_cast<Dart>(-1);
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

constexpr Dart reverse_dart(Dart d) { return d ^ 1u; }
constexpr Edge edge_of(Dart d) { return d >> 1; }
constexpr Dart dart_of(Edge e, unsigned end) { return (e << 1) | (end & 1u); }
constexpr unsigned end_of(Dart d) { return d & 1u; }

}  // namespace plancover
