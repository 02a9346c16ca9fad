#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/core_extraction.hpp"
#include "gog/development.hpp"
#include "gog/gogspec.hpp"
#include "gog/presentation.hpp"

namespace gog {

struct CoreEdgeRecord {
  std::string id, from, to;
  Integer from_exp, to_exp;
};

struct ComponentReport {
  std::string id;  // D1, D2, ... ordered by smallest root id
  ComponentClass cls = ComponentClass::GeneralGBS;
  std::vector<std::string> vertices;            // sorted root ids
  std::vector<CoreEdgeRecord> edges;            // sorted by edge id
  std::optional<Presentation> presentation;     // present iff cls == GeneralGBS
};

struct RootCaseReport {
  std::string root;
  std::string component;
  int kernel_case = 0;      // 1: component Z; 2: Z^2 or Klein bottle; 3: general
  std::string constraint;   // where c_root ranges: "Z", or "Z_or_Z2" in case 2
  int ball_vertices = 0;    // centralizer ball of the root generator
  bool ball_complete = false;
};

// Everything the pipeline can compute about a decomposition: the root
// partition, the classified core components D1..Dk with presentations of
// the general ones, the counts s (general), t (Z^2 or Klein bottle) and
// ignored (Z), and the kernel case of every non-cyclic root. The rank of
// the free-abelian kernel is not computed and the reports say so.
struct AnalysisReport {
  BallLimits limits;
  std::vector<std::string> cyclic_roots;      // sorted
  std::vector<std::string> non_cyclic_roots;  // sorted
  std::vector<ComponentReport> components;
  int s = 0, t = 0, ignored = 0;
  std::vector<RootCaseReport> per_root;       // non-cyclic roots, sorted

  int k() const { return static_cast<int>(components.size()); }
};

// Pure function of (spec, limits); repeated runs and edge-permuted inputs
// give identical reports.
AnalysisReport analyze(const GraphOfGroupsSpec& spec, const BallLimits& limits = {});

enum class ReportFormat { Text, Machine };

// Text: stable human-readable summary. Machine: report-v1 JSON, fixed key
// order, byte-deterministic, round-trippable through parse_report.
std::string render_report(const AnalysisReport& r, ReportFormat format);

AnalysisReport parse_report(const std::string& text);  // machine format only

}  // namespace gog
