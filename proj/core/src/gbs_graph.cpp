#include "gog/gbs_graph.hpp"

#include <algorithm>

#include "gog/error.hpp"

namespace gog {

int GBSGraph::add_edge(const std::string& id, const std::string& from,
                       const std::string& to, const Integer& from_exp,
                       const Integer& to_exp) {
  return add_edge(id, id + "'", from, to, from_exp, to_exp);
}

int GBSGraph::add_edge(const std::string& id, const std::string& rid,
                       const std::string& from, const std::string& to,
                       const Integer& from_exp, const Integer& to_exp) {
  if (from_exp == 0 || to_exp == 0)
    fail(ErrorCode::ZeroLabel, "zero label on edge " + id);
  int e = graph_.add_edge_pair(id, rid, from, to);
  labels_.push_back(to_exp);    // label(e) at terminal
  labels_.push_back(from_exp);  // label(e') at initial
  return e;
}

std::vector<int> GBSGraph::vertices_by_id() const {
  std::vector<int> vs(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) vs[i] = i;
  std::sort(vs.begin(), vs.end(),
            [this](int a, int b) { return vertex_id(a) < vertex_id(b); });
  return vs;
}

}  // namespace gog
