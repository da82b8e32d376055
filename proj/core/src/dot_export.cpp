#include "plancover/dot_export.hpp"

#include <sstream>

namespace plancover {

namespace {

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void emit_nodes(std::ostringstream& out, const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.vertex_id(v)) << ";\n";
  }
}

void emit_edge(std::ostringstream& out, const Graph& g, Edge e, const char* extra) {
  auto [u, v] = g.edge_ends(e);
  out << "  " << quoted(g.vertex_id(u)) << " -- " << quoted(g.vertex_id(v))
      << " [label=" << quoted(g.edge_id(e)) << extra << "];\n";
}

}  // namespace

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  emit_nodes(out, g);
  for (Edge e = 0; e < g.edge_count(); ++e) emit_edge(out, g, e, "");
  out << "}\n";
  return out.str();
}

std::string scheme_to_dot(const EmbeddingScheme& s) {
  const Graph& g = s.graph();
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::string order;
    for (Dart d : s.rotation_at(v)) {
      if (!order.empty()) order += ' ';
      order += g.dart_id(d);
    }
    out << "  // rotation at " << g.vertex_id(v) << ": " << order << "\n";
    out << "  " << quoted(g.vertex_id(v)) << " [tooltip=" << quoted(order) << "];\n";
  }
  for (Edge e = 0; e < g.edge_count(); ++e) {
    emit_edge(out, g, e, s.sign(e) < 0 ? ", style=dashed" : "");
  }
  out << "}\n";
  return out.str();
}

}  // namespace plancover
