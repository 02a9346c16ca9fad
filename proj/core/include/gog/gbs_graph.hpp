#pragma once

#include <string>
#include <vector>

#include "gog/integer.hpp"
#include "gog/serre_graph.hpp"

namespace gog {

// Graph of groups with infinite cyclic vertex and edge groups. Every vertex
// carries a generator z_v; the oriented edge e: u -> v carries the relation
//
//   z_u^{label(e')} e = e z_v^{label(e)}
//
// so label(e) is the attachment exponent at terminal(e). Labels are nonzero.
class GBSGraph {
 public:
  GBSGraph() = default;

  int add_vertex(const std::string& id) { return graph_.add_vertex(id); }

  // Edge pair id/rid: from->to with label(rid) = from_exp at `from` and
  // label(id) = to_exp at `to`. Default reverse id is id + "'".
  int add_edge(const std::string& id, const std::string& from, const std::string& to,
               const Integer& from_exp, const Integer& to_exp);
  int add_edge(const std::string& id, const std::string& rid, const std::string& from,
               const std::string& to, const Integer& from_exp, const Integer& to_exp);

  const SerreGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  bool has_vertex(const std::string& id) const { return graph_.has_vertex(id); }
  bool has_edge(const std::string& id) const { return graph_.has_edge(id); }
  int vertex_index(const std::string& id) const { return graph_.vertex_index(id); }
  int edge_index(const std::string& id) const { return graph_.edge_index(id); }
  const std::string& vertex_id(int v) const { return graph_.vertex_id(v); }
  const std::string& edge_id(int e) const { return graph_.edge_id(e); }
  static int reverse(int e) { return SerreGraph::reverse(e); }
  int initial(int e) const { return graph_.initial(e); }
  int terminal(int e) const { return graph_.terminal(e); }
  bool is_loop(int e) const { return graph_.is_loop(e); }
  const std::vector<int>& out_edges(int v) const { return graph_.out_edges(v); }
  int primary(int e) const { return graph_.primary(e); }

  const Integer& label(int e) const { return labels_[e]; }
  const Integer& label(const std::string& id) const { return labels_[edge_index(id)]; }

  // Vertices sorted by id (deterministic iteration over components, trees).
  std::vector<int> vertices_by_id() const;

 private:
  SerreGraph graph_;
  std::vector<Integer> labels_;
};

}  // namespace gog
