#include "gog/serre_graph.hpp"

#include <algorithm>

#include "gog/error.hpp"

namespace gog {

int SerreGraph::add_vertex(const std::string& id) {
  if (vertex_by_id_.count(id) || edge_by_id_.count(id))
    fail(ErrorCode::DuplicateId, "id already in use: " + id);
  int v = vertex_count();
  vertex_ids_.push_back(id);
  out_.emplace_back();
  vertex_by_id_.emplace(id, v);
  return v;
}

int SerreGraph::add_edge_pair(const std::string& id, const std::string& rid,
                              const std::string& from, const std::string& to) {
  if (id == rid) fail(ErrorCode::BadInvolution, "edge equal to its own reverse: " + id);
  for (const std::string* s : {&id, &rid})
    if (edge_by_id_.count(*s) || vertex_by_id_.count(*s))
      fail(ErrorCode::BadInvolution, "id already in use: " + *s);
  int u = vertex_index(from);
  int v = vertex_index(to);
  int e = edge_count();
  edge_ids_.push_back(id);
  edge_ids_.push_back(rid);
  initial_.push_back(u);
  initial_.push_back(v);
  edge_by_id_.emplace(id, e);
  edge_by_id_.emplace(rid, e + 1);
  insert_out_edge(u, e);
  insert_out_edge(v, e + 1);
  return e;
}

bool SerreGraph::has_vertex(const std::string& id) const {
  return vertex_by_id_.count(id) != 0;
}

bool SerreGraph::has_edge(const std::string& id) const {
  return edge_by_id_.count(id) != 0;
}

int SerreGraph::vertex_index(const std::string& id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) fail(ErrorCode::UnknownSymbol, "unknown vertex: " + id);
  return it->second;
}

int SerreGraph::edge_index(const std::string& id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) fail(ErrorCode::UnknownSymbol, "unknown edge: " + id);
  return it->second;
}

int SerreGraph::primary(int e) const {
  return edge_ids_[e] < edge_ids_[e ^ 1] ? e : (e ^ 1);
}

void SerreGraph::insert_out_edge(int v, int e) {
  auto& lst = out_[v];
  auto pos = std::lower_bound(lst.begin(), lst.end(), e, [this](int a, int b) {
    return edge_ids_[a] < edge_ids_[b];
  });
  lst.insert(pos, e);
}

}  // namespace gog
