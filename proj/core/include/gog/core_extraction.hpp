#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gog/gbs_graph.hpp"
#include "gog/gogspec.hpp"
#include "gog/integer.hpp"

namespace gog {

// GBS core of a root-decorated graph of groups: vertices are the declared
// roots, every spec edge is reattached at its attachment roots with its
// attachment exponents as labels. Split into connected components D1..Dk,
// ordered by smallest vertex id; vertex and edge insertion is id-sorted so
// the decomposition is independent of the input edge order.
struct CoreDecomposition {
  GBSGraph core;
  std::vector<GBSGraph> components;
  std::map<std::string, int> component_of_root;  // root id -> index into components

  int component_count() const { return static_cast<int>(components.size()); }
};

CoreDecomposition extract_core(const GraphOfGroupsSpec& spec);

// Result of eliminating unit-label edges. An oriented non-loop edge f with
// label(f) = +-1 expresses the generator at terminal(f) as a power of the
// one at initial(f) (z_t = z_i^{label(f) * label(f')}), so terminal(f) is
// merged into initial(f) and every other edge end at terminal(f) has its
// exponent multiplied by label(f) * label(f'). Loops are never collapsed.
// The smallest collapsible oriented edge id goes first, so the result is
// deterministic. vertex_map records z_old = z_surviving^{factor} for every
// original vertex (survivors map to themselves with factor 1).
struct CollapseResult {
  GBSGraph graph;
  std::map<std::string, std::pair<std::string, Integer>> vertex_map;
  std::vector<std::string> collapsed_edges;  // oriented ids, in collapse order
};

CollapseResult collapse_reduce(const GBSGraph& g);

// Isomorphism type of a component, read off its collapsed form: a bare
// vertex is Z; a single loop with label product 1 is Z^2, with product -1
// the Klein bottle group; a single non-loop edge with both labels of
// absolute value 2 is again the Klein bottle group; anything else is
// reported as a general GBS group (conservatively: no elementary group is
// ever claimed without matching one of these shapes).
enum class ComponentClass { Z, Z2, KleinBottle, GeneralGBS };

const char* component_class_name(ComponentClass c);
ComponentClass component_class_from_name(const std::string& name);

ComponentClass classify_component(const GBSGraph& g);

}  // namespace gog
