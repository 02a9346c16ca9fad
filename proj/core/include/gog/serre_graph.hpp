#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace gog {

// Finite graph in Serre's convention: oriented edges come in reverse pairs
// e, e' with reverse(reverse(e)) == e and reverse(e) != e. Endpoints:
// initial(e), terminal(e) == initial(reverse(e)).
//
// Edge pairs are stored at adjacent indices 2k (the declared orientation)
// and 2k+1 (its reverse), so reverse(i) == i ^ 1.
class SerreGraph {
 public:
  SerreGraph() = default;

  int add_vertex(const std::string& id);
  // Adds the oriented pair id: from->to and rid: to->from. Returns the index
  // of the declared orientation; the reverse is at index + 1.
  int add_edge_pair(const std::string& id, const std::string& rid,
                    const std::string& from, const std::string& to);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  int vertex_index(const std::string& id) const;  // throws UnknownSymbol
  int edge_index(const std::string& id) const;    // throws UnknownSymbol

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::string& edge_id(int e) const { return edge_ids_[e]; }

  static int reverse(int e) { return e ^ 1; }
  int initial(int e) const { return initial_[e]; }
  int terminal(int e) const { return initial_[e ^ 1]; }
  bool is_loop(int e) const { return initial(e) == terminal(e); }

  // Oriented edges leaving v, sorted by edge id (deterministic traversals).
  const std::vector<int>& out_edges(int v) const { return out_[v]; }

  // Of the pair {e, reverse(e)}, the orientation with the smaller id.
  int primary(int e) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<int> initial_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, int> vertex_by_id_;
  std::unordered_map<std::string, int> edge_by_id_;

  void insert_out_edge(int v, int e);
};

}  // namespace gog
