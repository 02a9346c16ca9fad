#include "gog/presentation.hpp"

#include <algorithm>
#include <deque>

#include "gog/error.hpp"

namespace gog {

namespace {

std::string power_token(const std::string& id, const Integer& k) {
  if (k == 1) return id;
  return id + "^" + to_string(k);
}

}  // namespace

std::string Presentation::str() const {
  std::string out = "<";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " | ";
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) out += ", ";
    out += relations[i].lhs + " = " + relations[i].rhs;
  }
  out += ">";
  return out;
}

std::vector<int> spanning_tree(const GBSGraph& g) {
  if (g.vertex_count() == 0)
    fail(ErrorCode::InvalidSpec, "spanning tree of an empty graph");
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> tree;
  std::deque<int> queue;
  int root = g.vertices_by_id().front();
  seen[root] = 1;
  queue.push_back(root);
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out_edges(v)) {
      int w = g.terminal(e);
      if (!seen[w]) {
        seen[w] = 1;
        tree.push_back(e);
        queue.push_back(w);
        ++reached;
      }
    }
  }
  if (reached != g.vertex_count())
    fail(ErrorCode::InvalidSpec, "graph is not connected");
  return tree;
}

Presentation pi1_presentation(const GBSGraph& g) {
  std::vector<char> in_tree(g.edge_count(), 0);
  for (int e : spanning_tree(g)) in_tree[e] = in_tree[GBSGraph::reverse(e)] = 1;

  Presentation p;
  for (int v : g.vertices_by_id()) p.generators.push_back(g.vertex_id(v));

  std::vector<int> geometric;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.primary(e) == e) geometric.push_back(e);
  std::sort(geometric.begin(), geometric.end(),
            [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });

  for (int e : geometric)
    if (!in_tree[e]) p.generators.push_back(g.edge_id(e));

  for (int e : geometric) {
    std::string lhs = power_token(g.vertex_id(g.initial(e)), g.label(GBSGraph::reverse(e)));
    std::string rhs = power_token(g.vertex_id(g.terminal(e)), g.label(e));
    if (in_tree[e]) {
      p.relations.push_back({lhs, rhs});
    } else {
      p.relations.push_back({lhs + " " + g.edge_id(e), g.edge_id(e) + " " + rhs});
    }
  }
  return p;
}

}  // namespace gog
