#include "gog/dot.hpp"

#include <algorithm>

namespace gog {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const GBSGraph& g, const DotOptions& options) {
  std::string out = "graph " + quoted(options.name) + " {\n";
  out += "  node [shape=circle];\n";
  for (int v : g.vertices_by_id()) {
    const std::string& id = g.vertex_id(v);
    auto it = options.node_labels.find(id);
    const std::string& label = it == options.node_labels.end() ? id : it->second;
    out += "  " + quoted(id) + " [label=" + quoted(label) + "];\n";
  }
  std::vector<int> geometric;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.primary(e) == e) geometric.push_back(e);
  std::sort(geometric.begin(), geometric.end(),
            [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });
  for (int e : geometric) {
    out += "  " + quoted(g.vertex_id(g.initial(e))) + " -- " +
           quoted(g.vertex_id(g.terminal(e))) + " [label=" + quoted(g.edge_id(e)) +
           ", taillabel=" + quoted(to_string(g.label(GBSGraph::reverse(e)))) +
           ", headlabel=" + quoted(to_string(g.label(e))) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gog
