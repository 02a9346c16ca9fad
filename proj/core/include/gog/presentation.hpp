#pragma once

#include <string>
#include <vector>

#include "gog/gbs_graph.hpp"

namespace gog {

// Finite presentation <generators | relations>. Relation sides are word
// strings in the usual token grammar, so they can be re-parsed over the
// group they present.
struct Presentation {
  struct Relation {
    std::string lhs;
    std::string rhs;
  };

  std::vector<std::string> generators;
  std::vector<Relation> relations;

  std::string str() const;  // "<a, t | a^2 t = t a^4>"
};

// Oriented edges of a breadth-first spanning tree rooted at the smallest
// vertex id, traversed in vertex-id then edge-id order. Each tree edge
// appears in its traversal orientation. Throws InvalidSpec when g is not
// connected (or is empty).
std::vector<int> spanning_tree(const GBSGraph& g);

// Fundamental group of a connected GBS graph: generators are the vertex
// generators plus the edge letters outside the spanning tree; each
// geometric edge e: u -> v contributes u^{label(e')} e = e v^{label(e)},
// with tree edge letters deleted from their relation.
Presentation pi1_presentation(const GBSGraph& g);

}  // namespace gog
