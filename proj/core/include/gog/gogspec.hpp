#pragma once

#include <map>
#include <string>
#include <vector>

#include "gog/error.hpp"
#include "gog/integer.hpp"
#include "gog/serre_graph.hpp"

namespace gog {

enum class VertexKind { Cyclic, General };

// Raw mirror of a gogspec-v1 document. May describe an invalid spec;
// validate() reports every violation instead of failing.
struct SpecVertexRecord {
  std::string id;
  VertexKind kind = VertexKind::Cyclic;
  std::vector<std::string> roots;  // empty for cyclic (implicit root = id)
};

struct SpecEdgeRecord {
  std::string id;  // declares the pair id (from->to) and id + "'" (to->from)
  std::string from, to;
  std::string from_root, to_root;
  Integer from_exp, to_exp;
};

struct SpecDocument {
  std::vector<SpecVertexRecord> vertices;
  std::vector<SpecEdgeRecord> edges;
};

struct Violation {
  ErrorCode code;
  std::string subject;  // offending id
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> entries;
  bool ok() const { return entries.empty(); }
};

// Identifier charset for vertices, roots and edges. The apostrophe is
// reserved for reverse edges and '@' for development identifiers.
bool valid_id(const std::string& id);

ValidationReport validate(const SpecDocument& doc);

struct Root {
  std::string id;
  std::string vertex;
  bool cyclic;  // implicit root of a cyclic vertex
};

// Validated graph-of-groups input: Serre graph over the vertices, a root
// table (globally unique ids; cyclic vertices own the implicit root named
// after them), and per oriented edge the root and exponent it attaches to
// at its terminal vertex.
class GraphOfGroupsSpec {
 public:
  static GraphOfGroupsSpec from_document(const SpecDocument& doc);  // throws first violation

  const SpecDocument& document() const { return doc_; }
  const SerreGraph& graph() const { return graph_; }

  VertexKind vertex_kind(int v) const { return kinds_[v]; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(const std::string& id) const;
  bool has_root(const std::string& id) const { return root_by_id_.count(id) != 0; }
  const std::vector<int>& vertex_roots(int v) const { return vertex_roots_[v]; }

  // Attachment of oriented edge e at terminal(e).
  const std::string& attach_root(int e) const { return attach_root_[e]; }
  const Integer& attach_exp(int e) const { return attach_exp_[e]; }

  bool pure_gbs() const;  // every vertex cyclic

 private:
  SpecDocument doc_;
  SerreGraph graph_;
  std::vector<VertexKind> kinds_;
  std::vector<Root> roots_;
  std::map<std::string, int> root_by_id_;
  std::vector<std::vector<int>> vertex_roots_;
  std::vector<std::string> attach_root_;
  std::vector<Integer> attach_exp_;
};

ValidationReport validate(const GraphOfGroupsSpec& spec);

// Structural equality of the normalized documents (order-insensitive).
bool spec_equal(const GraphOfGroupsSpec& a, const GraphOfGroupsSpec& b);

}  // namespace gog
