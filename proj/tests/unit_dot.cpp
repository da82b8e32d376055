#include <doctest.h>

#include "plancover/corpus.hpp"
#include "plancover/dot_export.hpp"
#include "test_helpers.hpp"

using namespace plancover;

TEST_CASE("graph export lists every vertex and edge deterministically") {
  std::string dot = graph_to_dot(*k4());
  CHECK(dot == graph_to_dot(*k4()));
  CHECK(dot.rfind("graph {", 0) == 0);
  CHECK(dot.find("\"1\";") != std::string::npos);
  CHECK(dot.find("\"1\" -- \"2\" [label=\"12\"];") != std::string::npos);
  CHECK(dot.find("\"3\" -- \"4\" [label=\"34\"];") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("scheme export records rotations and styles negative edges") {
  EmbeddingScheme s(cycle_graph(3), {{0, 5}, {1, 2}, {3, 4}}, {1, 1, -1});
  std::string dot = scheme_to_dot(s);
  CHECK(dot.find("// rotation at 1: c1.0 c3.1") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  // Only the one negative edge is dashed.
  CHECK(dot.find("\"1\" -- \"2\" [label=\"c1\"];") != std::string::npos);
  CHECK(dot.find("\"3\" -- \"1\" [label=\"c3\", style=dashed];") != std::string::npos);
}
