#include "gog/core_extraction.hpp"

#include <algorithm>

#include "gog/error.hpp"

namespace gog {

namespace {

// Mutable edge record used while collapsing: declared orientation id goes
// from `from` to `to` with label fe at `from` (its reverse's label) and te
// at `to`.
struct EdgeRec {
  std::string id, rid;
  std::string from, to;
  Integer fe, te;
};

std::vector<EdgeRec> edge_records(const GBSGraph& g) {
  std::vector<int> geometric;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.primary(e) == e) geometric.push_back(e);
  std::sort(geometric.begin(), geometric.end(),
            [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });
  std::vector<EdgeRec> recs;
  for (int e : geometric)
    recs.push_back({g.edge_id(e), g.edge_id(GBSGraph::reverse(e)),
                    g.vertex_id(g.initial(e)), g.vertex_id(g.terminal(e)),
                    g.label(GBSGraph::reverse(e)), g.label(e)});
  return recs;
}

GBSGraph build_graph(const std::vector<std::string>& vertices,
                     const std::vector<EdgeRec>& edges) {
  std::vector<std::string> vs = vertices;
  std::sort(vs.begin(), vs.end());
  GBSGraph g;
  for (const auto& v : vs) g.add_vertex(v);
  std::vector<const EdgeRec*> es;
  for (const auto& r : edges) es.push_back(&r);
  std::sort(es.begin(), es.end(),
            [](const EdgeRec* a, const EdgeRec* b) { return a->id < b->id; });
  for (const EdgeRec* r : es) g.add_edge(r->id, r->rid, r->from, r->to, r->fe, r->te);
  return g;
}

}  // namespace

CoreDecomposition extract_core(const GraphOfGroupsSpec& spec) {
  const SerreGraph& base = spec.graph();

  std::vector<std::string> root_ids;
  for (const Root& r : spec.roots()) root_ids.push_back(r.id);
  std::sort(root_ids.begin(), root_ids.end());

  std::vector<EdgeRec> recs;
  for (int e = 0; e < base.edge_count(); e += 2)
    recs.push_back({base.edge_id(e), base.edge_id(e + 1),
                    spec.attach_root(SerreGraph::reverse(e)), spec.attach_root(e),
                    spec.attach_exp(SerreGraph::reverse(e)), spec.attach_exp(e)});
  std::sort(recs.begin(), recs.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });

  CoreDecomposition out;
  for (const auto& r : root_ids) out.core.add_vertex(r);
  for (const auto& r : recs) out.core.add_edge(r.id, r.rid, r.from, r.to, r.fe, r.te);

  // components by BFS over id-sorted vertices: component order is the order
  // of their smallest vertex ids
  const GBSGraph& core = out.core;
  std::vector<int> comp(core.vertex_count(), -1);
  for (int v : core.vertices_by_id()) {
    if (comp[v] >= 0) continue;
    int c = static_cast<int>(out.components.size());
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : core.out_edges(x)) {
        int y = core.terminal(e);
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    out.components.emplace_back();
  }

  std::vector<std::vector<std::string>> comp_vertices(out.components.size());
  std::vector<std::vector<EdgeRec>> comp_edges(out.components.size());
  for (int v : core.vertices_by_id())
    comp_vertices[comp[v]].push_back(core.vertex_id(v));
  for (const auto& r : recs) comp_edges[comp[core.vertex_index(r.from)]].push_back(r);

  for (size_t c = 0; c < out.components.size(); ++c)
    out.components[c] = build_graph(comp_vertices[c], comp_edges[c]);
  for (int v = 0; v < core.vertex_count(); ++v)
    out.component_of_root[core.vertex_id(v)] = comp[v];
  return out;
}

CollapseResult collapse_reduce(const GBSGraph& g) {
  std::vector<std::string> verts;
  for (int v : g.vertices_by_id()) verts.push_back(g.vertex_id(v));
  std::vector<EdgeRec> edges = edge_records(g);

  CollapseResult out;
  for (const auto& v : verts) out.vertex_map[v] = {v, Integer(1)};

  for (;;) {
    // smallest collapsible oriented edge id: non-loop with a unit label at
    // its terminal vertex
    size_t best = edges.size();
    bool best_reversed = false;
    std::string best_id;
    for (size_t i = 0; i < edges.size(); ++i) {
      const EdgeRec& r = edges[i];
      if (r.from == r.to) continue;
      if (abs(r.te) == 1 && (best == edges.size() || r.id < best_id)) {
        best = i;
        best_reversed = false;
        best_id = r.id;
      }
      if (abs(r.fe) == 1 && (best == edges.size() || r.rid < best_id)) {
        best = i;
        best_reversed = true;
        best_id = r.rid;
      }
    }
    if (best == edges.size()) break;

    EdgeRec f = edges[best];
    std::string gone = best_reversed ? f.from : f.to;
    std::string kept = best_reversed ? f.to : f.from;
    Integer factor = f.fe * f.te;
    out.collapsed_edges.push_back(best_id);
    edges.erase(edges.begin() + best);
    verts.erase(std::find(verts.begin(), verts.end(), gone));
    for (auto& r : edges) {
      if (r.from == gone) {
        r.from = kept;
        r.fe *= factor;
      }
      if (r.to == gone) {
        r.to = kept;
        r.te *= factor;
      }
    }
    for (auto& [orig, image] : out.vertex_map) {
      (void)orig;
      if (image.first == gone) {
        image.first = kept;
        image.second *= factor;
      }
    }
  }

  out.graph = build_graph(verts, edges);
  return out;
}

const char* component_class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::Z: return "Z";
    case ComponentClass::Z2: return "Z2";
    case ComponentClass::KleinBottle: return "KleinBottle";
    default: return "GeneralGBS";
  }
}

ComponentClass component_class_from_name(const std::string& name) {
  if (name == "Z") return ComponentClass::Z;
  if (name == "Z2") return ComponentClass::Z2;
  if (name == "KleinBottle") return ComponentClass::KleinBottle;
  if (name == "GeneralGBS") return ComponentClass::GeneralGBS;
  fail(ErrorCode::SyntaxError, "unknown component class " + name);
}

ComponentClass classify_component(const GBSGraph& g) {
  GBSGraph r = collapse_reduce(g).graph;
  int geometric = r.edge_count() / 2;
  if (r.vertex_count() == 1 && geometric == 0) return ComponentClass::Z;
  if (geometric == 1) {
    Integer prod = r.label(0) * r.label(1);
    if (r.is_loop(0)) {
      if (prod == 1) return ComponentClass::Z2;
      if (prod == -1) return ComponentClass::KleinBottle;
    } else if (abs(r.label(0)) == 2 && abs(r.label(1)) == 2) {
      return ComponentClass::KleinBottle;
    }
  }
  return ComponentClass::GeneralGBS;
}

}  // namespace gog
