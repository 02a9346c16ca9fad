#pragma once

#include <map>
#include <string>

#include "gog/gbs_graph.hpp"

namespace gog {

struct DotOptions {
  std::string name = "gbs";
  // Display label per vertex id; missing vertices show their id.
  std::map<std::string, std::string> node_labels;
};

// Graphviz text for a GBS graph: one undirected record per geometric edge
// (primary orientation), with the label at the initial vertex as taillabel
// and the label at the terminal vertex as headlabel. Deterministic: nodes
// and edges in id order.
std::string export_dot(const GBSGraph& g, const DotOptions& options = {});

}  // namespace gog
