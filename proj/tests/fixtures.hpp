#pragma once

// Shared fixture graphs. bs24 is the (2,4) Baumslag-Solitar loop, fig is the
// two-vertex graph with a double edge and a (1,24) loop; both also exist as
// JSON files under GOG_FIXTURE_DIR for the parser and CLI tests.

#include <fstream>
#include <sstream>
#include <string>

#include "gog/gbs_graph.hpp"
#include "gog/word.hpp"

inline gog::GBSGraph bs24_graph() {
  gog::GBSGraph g;
  g.add_vertex("a");
  g.add_edge("t", "a", "a", 2, 4);
  return g;
}

inline gog::GBSGraph fig_graph() {
  gog::GBSGraph g;
  g.add_vertex("v");
  g.add_vertex("u");
  g.add_edge("e1", "v", "u", 4, 12);
  g.add_edge("e2", "v", "u", 3, 3);
  g.add_edge("e3", "u", "u", 1, 24);
  return g;
}

inline gog::GBSGraph loop_graph(const gog::Integer& m, const gog::Integer& n) {
  gog::GBSGraph g;
  g.add_vertex("a");
  g.add_edge("t", "a", "a", m, n);
  return g;
}

inline gog::GBSGraph segment_graph(const gog::Integer& m, const gog::Integer& n) {
  gog::GBSGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("f", "a", "b", m, n);
  return g;
}

inline gog::Word w(const gog::GBSGraph& g, const std::string& text) {
  return gog::Word::parse(g, text);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(GOG_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
