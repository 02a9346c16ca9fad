#include "gog/analyze.hpp"

#include <algorithm>

#include "json_detail.hpp"

namespace gog {

using detail::integer_field;
using detail::integer_value;
using detail::string_field;
using detail::syntax;
using json = nlohmann::ordered_json;

AnalysisReport analyze(const GraphOfGroupsSpec& spec, const BallLimits& limits) {
  AnalysisReport rep;
  rep.limits = limits;
  for (const Root& r : spec.roots())
    (r.cyclic ? rep.cyclic_roots : rep.non_cyclic_roots).push_back(r.id);
  std::sort(rep.cyclic_roots.begin(), rep.cyclic_roots.end());
  std::sort(rep.non_cyclic_roots.begin(), rep.non_cyclic_roots.end());

  CoreDecomposition core = extract_core(spec);
  for (int c = 0; c < core.component_count(); ++c) {
    const GBSGraph& g = core.components[c];
    ComponentReport cr;
    cr.id = "D" + std::to_string(c + 1);
    cr.cls = classify_component(g);
    for (int v : g.vertices_by_id()) cr.vertices.push_back(g.vertex_id(v));
    std::vector<int> geometric;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.primary(e) == e) geometric.push_back(e);
    std::sort(geometric.begin(), geometric.end(),
              [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });
    for (int e : geometric)
      cr.edges.push_back({g.edge_id(e), g.vertex_id(g.initial(e)),
                          g.vertex_id(g.terminal(e)), g.label(GBSGraph::reverse(e)),
                          g.label(e)});
    if (cr.cls == ComponentClass::GeneralGBS) cr.presentation = pi1_presentation(g);
    switch (cr.cls) {
      case ComponentClass::Z: ++rep.ignored; break;
      case ComponentClass::Z2:
      case ComponentClass::KleinBottle: ++rep.t; break;
      default: ++rep.s; break;
    }
    rep.components.push_back(std::move(cr));
  }

  for (const std::string& rid : rep.non_cyclic_roots) {
    int c = core.component_of_root.at(rid);
    ComponentClass cls = rep.components[c].cls;
    int kernel_case = cls == ComponentClass::Z ? 1
                      : cls == ComponentClass::GeneralGBS ? 3
                                                          : 2;
    ComponentBall ball = component_ball(core.components[c], rid, 1, limits);
    rep.per_root.push_back({rid, rep.components[c].id, kernel_case,
                            kernel_case == 2 ? "Z_or_Z2" : "Z", ball.vertex_count(),
                            ball.complete()});
  }
  return rep;
}

namespace {

std::string bracket_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "]";
}

std::string render_text(const AnalysisReport& r) {
  std::string out = "analysis of gbs core\n";
  out += "limits: max-vertices " + std::to_string(r.limits.max_vertices) +
         ", max-index " + to_string(r.limits.max_abs_index) + "\n";
  out += "roots: cyclic " + bracket_list(r.cyclic_roots) + "; non-cyclic " +
         bracket_list(r.non_cyclic_roots) + "\n";
  out += "components: " + std::to_string(r.k()) + "\n";
  out += "k = " + std::to_string(r.k()) + "\n";
  out += "s = " + std::to_string(r.s) + "\n";
  out += "t = " + std::to_string(r.t) + "\n";
  out += "ignored = " + std::to_string(r.ignored) + "\n";
  for (const ComponentReport& c : r.components) {
    std::vector<std::string> edges;
    for (const CoreEdgeRecord& e : c.edges)
      edges.push_back(e.id + "(" + to_string(e.from_exp) + "," + to_string(e.to_exp) + ")");
    out += c.id + ": " + component_class_name(c.cls) + "; vertices " +
           bracket_list(c.vertices) + "; edges " + bracket_list(edges) + "\n";
    if (c.presentation) out += "  presentation: " + c.presentation->str() + "\n";
  }
  if (r.per_root.empty()) {
    out += "per-root kernel cases: none\n";
  } else {
    out += "per-root kernel cases:\n";
    for (const RootCaseReport& pr : r.per_root) {
      out += "  " + pr.root + ": component " + pr.component + ", case " +
             std::to_string(pr.kernel_case) + ", c_" + pr.root +
             (pr.constraint == "Z_or_Z2" ? " in Z or Z^2" : " in Z") + ", ball " +
             std::to_string(pr.ball_vertices) + " vertices (" +
             (pr.ball_complete ? "complete" : "truncated") + ")\n";
    }
  }
  out += "kernel rank: not computed\n";
  return out;
}

std::string render_machine(const AnalysisReport& r) {
  json j;
  j["format"] = "report-v1";
  j["limits"] = {{"max_vertices", r.limits.max_vertices},
                 {"max_index", integer_value(r.limits.max_abs_index)}};
  j["roots"] = {{"cyclic", r.cyclic_roots}, {"non_cyclic", r.non_cyclic_roots}};
  j["counts"] = {{"k", r.k()}, {"s", r.s}, {"t", r.t}, {"ignored", r.ignored}};
  j["components"] = json::array();
  for (const ComponentReport& c : r.components) {
    json cj;
    cj["id"] = c.id;
    cj["class"] = component_class_name(c.cls);
    cj["vertices"] = c.vertices;
    cj["edges"] = json::array();
    for (const CoreEdgeRecord& e : c.edges) {
      json ej;
      ej["id"] = e.id;
      ej["from"] = e.from;
      ej["to"] = e.to;
      ej["from_exp"] = integer_value(e.from_exp);
      ej["to_exp"] = integer_value(e.to_exp);
      cj["edges"].push_back(std::move(ej));
    }
    if (c.presentation) {
      json pj;
      pj["generators"] = c.presentation->generators;
      pj["relations"] = json::array();
      for (const Presentation::Relation& rel : c.presentation->relations)
        pj["relations"].push_back(rel.lhs + " = " + rel.rhs);
      cj["presentation"] = std::move(pj);
    }
    j["components"].push_back(std::move(cj));
  }
  j["per_root"] = json::array();
  for (const RootCaseReport& pr : r.per_root) {
    json pj;
    pj["root"] = pr.root;
    pj["component"] = pr.component;
    pj["case"] = pr.kernel_case;
    pj["constraint"] = pr.constraint;
    pj["ball"] = {{"vertices", pr.ball_vertices}, {"complete", pr.ball_complete}};
    j["per_root"].push_back(std::move(pj));
  }
  j["kernel_rank"] = "not computed";
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const AnalysisReport& r, ReportFormat format) {
  return format == ReportFormat::Text ? render_text(r) : render_machine(r);
}

AnalysisReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    syntax(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object() || string_field(j, "format") != "report-v1")
    syntax("unsupported format, expected report-v1");

  AnalysisReport r;
  const json& lim = j.at("limits");
  r.limits.max_vertices = lim.at("max_vertices").get<int>();
  r.limits.max_abs_index = integer_field(lim, "max_index");
  r.cyclic_roots = j.at("roots").at("cyclic").get<std::vector<std::string>>();
  r.non_cyclic_roots = j.at("roots").at("non_cyclic").get<std::vector<std::string>>();
  r.s = j.at("counts").at("s").get<int>();
  r.t = j.at("counts").at("t").get<int>();
  r.ignored = j.at("counts").at("ignored").get<int>();

  for (const json& cj : j.at("components")) {
    ComponentReport c;
    c.id = string_field(cj, "id");
    c.cls = component_class_from_name(string_field(cj, "class"));
    c.vertices = cj.at("vertices").get<std::vector<std::string>>();
    for (const json& ej : cj.at("edges"))
      c.edges.push_back({string_field(ej, "id"), string_field(ej, "from"),
                         string_field(ej, "to"), integer_field(ej, "from_exp"),
                         integer_field(ej, "to_exp")});
    if (cj.contains("presentation")) {
      Presentation p;
      p.generators = cj.at("presentation").at("generators").get<std::vector<std::string>>();
      for (const json& rel : cj.at("presentation").at("relations")) {
        std::string s = rel.get<std::string>();
        size_t at = s.find(" = ");
        if (at == std::string::npos) syntax("relation without ' = ': " + s);
        p.relations.push_back({s.substr(0, at), s.substr(at + 3)});
      }
      c.presentation = std::move(p);
    }
    r.components.push_back(std::move(c));
  }
  if (r.k() != j.at("counts").at("k").get<int>())
    syntax("component count disagrees with counts.k");

  for (const json& pj : j.at("per_root")) {
    RootCaseReport pr;
    pr.root = string_field(pj, "root");
    pr.component = string_field(pj, "component");
    pr.kernel_case = pj.at("case").get<int>();
    pr.constraint = string_field(pj, "constraint");
    pr.ball_vertices = pj.at("ball").at("vertices").get<int>();
    pr.ball_complete = pj.at("ball").at("complete").get<bool>();
    r.per_root.push_back(std::move(pr));
  }
  return r;
}

}  // namespace gog
