#include "gog/parse.hpp"

#include <algorithm>

#include "json_detail.hpp"

namespace gog {

using json = nlohmann::ordered_json;
using detail::integer_field;
using detail::integer_value;
using detail::string_field;
using detail::syntax;

SpecDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    syntax(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) syntax("top level must be an object");
  if (string_field(j, "format") != "gogspec-v1")
    syntax("unsupported format, expected gogspec-v1");
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    syntax("missing vertices array");
  if (!j.contains("edges") || !j.at("edges").is_array())
    syntax("missing edges array");

  SpecDocument doc;
  for (const json& vj : j.at("vertices")) {
    if (!vj.is_object()) syntax("vertex record must be an object");
    SpecVertexRecord v;
    v.id = string_field(vj, "id");
    std::string kind = string_field(vj, "kind");
    if (kind == "cyclic") {
      v.kind = VertexKind::Cyclic;
      if (vj.contains("roots")) syntax("cyclic vertex " + v.id + " must not list roots");
    } else if (kind == "general") {
      v.kind = VertexKind::General;
      if (!vj.contains("roots") || !vj.at("roots").is_array())
        syntax("general vertex " + v.id + " must list roots");
      for (const json& rj : vj.at("roots")) {
        if (!rj.is_string()) syntax("root ids must be strings");
        v.roots.push_back(rj.get<std::string>());
      }
    } else {
      syntax("vertex " + v.id + ": unknown kind " + kind);
    }
    doc.vertices.push_back(std::move(v));
  }
  for (const json& ej : j.at("edges")) {
    if (!ej.is_object()) syntax("edge record must be an object");
    SpecEdgeRecord e;
    e.id = string_field(ej, "id");
    e.from = string_field(ej, "from");
    e.to = string_field(ej, "to");
    e.from_root = string_field(ej, "from_root");
    e.to_root = string_field(ej, "to_root");
    e.from_exp = integer_field(ej, "from_exp");
    e.to_exp = integer_field(ej, "to_exp");
    doc.edges.push_back(std::move(e));
  }
  return doc;
}

GraphOfGroupsSpec parse_spec(const std::string& text) {
  return GraphOfGroupsSpec::from_document(parse_document(text));
}

std::string serialize_spec(const GraphOfGroupsSpec& spec) {
  SpecDocument doc = spec.document();
  std::sort(doc.vertices.begin(), doc.vertices.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(doc.edges.begin(), doc.edges.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });

  json j;
  j["format"] = "gogspec-v1";
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) {
    json vj;
    vj["id"] = v.id;
    vj["kind"] = v.kind == VertexKind::Cyclic ? "cyclic" : "general";
    if (v.kind == VertexKind::General) {
      auto roots = v.roots;
      std::sort(roots.begin(), roots.end());
      vj["roots"] = roots;
    }
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = json::array();
  for (const auto& e : doc.edges) {
    json ej;
    ej["id"] = e.id;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["from_root"] = e.from_root;
    ej["from_exp"] = integer_value(e.from_exp);
    ej["to_root"] = e.to_root;
    ej["to_exp"] = integer_value(e.to_exp);
    j["edges"].push_back(std::move(ej));
  }
  return j.dump(2) + "\n";
}

}  // namespace gog
