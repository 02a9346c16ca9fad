#include "gog/gogspec.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gog {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroLabel: return "ZeroLabel";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::RootViolation: return "RootViolation";
    case ErrorCode::NonRootAttachment: return "NonRootAttachment";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::UnsoundWord: return "UnsoundWord";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotInCentralizer: return "NotInCentralizer";
    case ErrorCode::RelationNotPreserved: return "RelationNotPreserved";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
  };
  if (!alpha(id[0])) return false;
  for (char c : id.substr(1))
    if (!tail(c)) return false;
  return true;
}

ValidationReport validate(const SpecDocument& doc) {
  ValidationReport report;
  auto add = [&](ErrorCode code, const std::string& subject, const std::string& detail) {
    report.entries.push_back({code, subject, detail});
  };

  std::set<std::string> ids;  // vertices, roots, edges and their reverses
  auto claim = [&](const std::string& id, const char* what) -> bool {
    if (!valid_id(id)) {
      add(ErrorCode::SyntaxError, id, std::string("bad ") + what + " identifier");
      return false;
    }
    if (!ids.insert(id).second) {
      add(ErrorCode::DuplicateId, id, std::string(what) + " id already in use");
      return false;
    }
    return true;
  };

  std::map<std::string, const SpecVertexRecord*> vertex_of;
  std::map<std::string, std::string> root_owner;

  for (const auto& v : doc.vertices) {
    if (claim(v.id, "vertex")) vertex_of.emplace(v.id, &v);
    if (v.kind == VertexKind::Cyclic) {
      if (!v.roots.empty())
        add(ErrorCode::RootViolation, v.id, "cyclic vertex declares roots");
      root_owner.emplace(v.id, v.id);  // implicit root, same id
    } else {
      if (v.roots.empty())
        add(ErrorCode::RootViolation, v.id, "general vertex declares no roots");
      for (const auto& r : v.roots)
        if (claim(r, "root")) root_owner.emplace(r, v.id);
    }
  }

  for (const auto& e : doc.edges) {
    bool id_ok = claim(e.id, "edge");
    if (id_ok && !ids.insert(e.id + "'").second) {
      add(ErrorCode::BadInvolution, e.id, "reverse id " + e.id + "' already in use");
      id_ok = false;
    }
    for (const auto& [end, root, exp] :
         {std::tuple{e.from, e.from_root, e.from_exp}, std::tuple{e.to, e.to_root, e.to_exp}}) {
      if (!vertex_of.count(end)) {
        add(ErrorCode::UnknownSymbol, e.id, "endpoint references unknown vertex " + end);
        continue;
      }
      if (exp == 0) add(ErrorCode::ZeroLabel, e.id, "zero exponent at " + end);
      auto owner = root_owner.find(root);
      if (owner == root_owner.end())
        add(ErrorCode::UnknownSymbol, e.id, "attachment references unknown root " + root);
      else if (owner->second != end)
        add(ErrorCode::NonRootAttachment, e.id,
            "root " + root + " belongs to vertex " + owner->second + ", not " + end);
    }
  }
  return report;
}

GraphOfGroupsSpec GraphOfGroupsSpec::from_document(const SpecDocument& doc) {
  ValidationReport report = validate(doc);
  if (!report.ok()) {
    const Violation& v = report.entries.front();
    fail(v.code, v.subject + ": " + v.detail);
  }

  GraphOfGroupsSpec spec;
  spec.doc_ = doc;
  for (auto& v : spec.doc_.vertices)
    if (v.kind == VertexKind::Cyclic) v.roots = {v.id};

  for (const auto& v : spec.doc_.vertices) {
    int vi = spec.graph_.add_vertex(v.id);
    spec.kinds_.push_back(v.kind);
    spec.vertex_roots_.emplace_back();
    for (const auto& r : v.roots) {
      int ri = static_cast<int>(spec.roots_.size());
      spec.roots_.push_back({r, v.id, v.kind == VertexKind::Cyclic});
      spec.root_by_id_.emplace(r, ri);
      spec.vertex_roots_[vi].push_back(ri);
    }
  }
  for (const auto& e : spec.doc_.edges) {
    spec.graph_.add_edge_pair(e.id, e.id + "'", e.from, e.to);
    spec.attach_root_.push_back(e.to_root);   // oriented edge e, at terminal
    spec.attach_exp_.push_back(e.to_exp);
    spec.attach_root_.push_back(e.from_root);  // reverse, at its terminal = from
    spec.attach_exp_.push_back(e.from_exp);
  }
  return spec;
}

const Root& GraphOfGroupsSpec::root(const std::string& id) const {
  auto it = root_by_id_.find(id);
  if (it == root_by_id_.end()) fail(ErrorCode::UnknownSymbol, "unknown root: " + id);
  return roots_[it->second];
}

bool GraphOfGroupsSpec::pure_gbs() const {
  return std::all_of(kinds_.begin(), kinds_.end(),
                     [](VertexKind k) { return k == VertexKind::Cyclic; });
}

ValidationReport validate(const GraphOfGroupsSpec& spec) {
  return validate(spec.document());
}

namespace {

using VertexKey = std::tuple<std::string, VertexKind, std::vector<std::string>>;
using EdgeKey = std::tuple<std::string, std::string, std::string, std::string,
                           std::string, Integer, Integer>;

std::pair<std::vector<VertexKey>, std::vector<EdgeKey>> normal_form(
    const GraphOfGroupsSpec& s) {
  std::vector<VertexKey> vs;
  for (const auto& v : s.document().vertices) {
    auto roots = v.roots;
    std::sort(roots.begin(), roots.end());
    vs.emplace_back(v.id, v.kind, roots);
  }
  std::vector<EdgeKey> es;
  for (const auto& e : s.document().edges)
    es.emplace_back(e.id, e.from, e.to, e.from_root, e.to_root, e.from_exp, e.to_exp);
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  return {vs, es};
}

}  // namespace

bool spec_equal(const GraphOfGroupsSpec& a, const GraphOfGroupsSpec& b) {
  return normal_form(a) == normal_form(b);
}

}  // namespace gog
