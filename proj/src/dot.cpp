#include "coarsetw/dot.hpp"

#include <sstream>

namespace coarsetw {

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v : g.vertices()) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string j_to_dot(const JGraph& j, bool color_edges,
                     const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t i = 0; i < j.vertices.size(); ++i) {
    const JVertex& jv = j.vertices[i];
    out << "  v" << i << " [label=\"(" << jv.layer << "," << jv.core
        << ")\"];\n";
  }
  for (const JEdge& e : j.edges) {
    out << "  v" << e.u << " -- v" << e.v;
    if (color_edges) out << " [color=" << color_name(e.color) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coarsetw
