#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gog/gbs_graph.hpp"
#include "gog/integer.hpp"
#include "gog/presentation.hpp"
#include "gog/word.hpp"

namespace gog {

// Vertex (v, n) of the development of a GBS graph: v a base vertex index,
// n a nonzero integer. (v, n) stands for the coset of <z_v^n>, so the
// component of (v, n) computes the centralizer C(z_v^n).
struct DevVertex {
  int vertex;
  Integer index;

  friend bool operator==(const DevVertex& a, const DevVertex& b) {
    return a.vertex == b.vertex && a.index == b.index;
  }
};

// Oriented edge (e, n) of the development. Endpoints:
//   initial = (initial(e), n * label(e')), terminal = (terminal(e), n * label(e)),
// and reverse((e, n)) = (e', n). The induced label is label(e).
struct DevEdge {
  int edge;
  Integer index;

  friend bool operator==(const DevEdge& a, const DevEdge& b) {
    return a.edge == b.edge && a.index == b.index;
  }
};

DevVertex dev_initial(const GBSGraph& g, const DevEdge& d);
DevVertex dev_terminal(const GBSGraph& g, const DevEdge& d);
DevEdge dev_reverse(const DevEdge& d);

std::string dev_vertex_id(const GBSGraph& g, const DevVertex& p);  // "a@2"
std::string dev_edge_id(const GBSGraph& g, const DevEdge& d);      // "t@1"

// Exploration caps for possibly infinite components.
struct BallLimits {
  int max_vertices = 256;
  Integer max_abs_index = Integer(1000000000);
};

// All development edges with terminal (v, n): for each base edge e into v
// whose label divides n, the edge (e, n / label(e)). Sorted by edge id.
std::vector<DevEdge> dev_incident(const GBSGraph& g, const DevVertex& p);

// Finite explored portion of one development component, with a breadth-first
// tree for path words. The ball graph is itself a GBSGraph over "v@n" ids,
// so presentations and DOT export apply to it directly.
class ComponentBall {
 public:
  const GBSGraph& base_graph() const { return *base_; }
  const DevVertex& base() const { return base_vertex_; }

  // True iff exploration closed with no frontier and no limit was hit;
  // then no edge of the full development leaves the ball.
  bool complete() const { return complete_; }

  const GBSGraph& graph() const { return graph_; }
  int vertex_count() const { return static_cast<int>(order_.size()); }
  const std::vector<DevVertex>& vertices() const { return order_; }  // BFS order
  // Ball edges outside the BFS tree, one orientation per geometric edge.
  const std::vector<DevEdge>& non_tree_edges() const { return extra_; }

  bool contains(const std::string& vertex, const Integer& index) const;

  // Word x over the base graph reading the tree path from the ball's base
  // to (vertex, index); it satisfies x z^index x^-1 = z_base^{base index}.
  Word path_word(const std::string& vertex, const Integer& index) const;

  // Presentation generators mapped into the base group: ball vertex (u, m)
  // goes to x z_u x^-1, a non-tree ball edge (e, i) to x_initial e x_terminal^-1.
  // Every image lies in the centralizer the component computes.
  Word vertex_generator_word(const DevVertex& p) const;
  Word edge_generator_word(const DevEdge& d) const;

  // Node label overrides "(v,n)" keyed by ball vertex id, for DOT export.
  std::map<std::string, std::string> dot_labels() const;

 private:
  friend ComponentBall component_ball(const GBSGraph& g, const std::string& v,
                                      const Integer& n, const BallLimits& limits);
  ComponentBall() = default;

  int position(const DevVertex& p) const;  // throws UnknownSymbol when absent

  const GBSGraph* base_ = nullptr;
  DevVertex base_vertex_{0, 1};
  bool complete_ = false;
  GBSGraph graph_;
  std::vector<DevVertex> order_;
  std::vector<std::optional<DevEdge>> parent_;  // by BFS position, edge into it
  std::vector<DevEdge> extra_;
  std::map<std::pair<int, Integer>, int> pos_;
};

// Breadth-first closure of (v, n) under dev_incident, capped by limits.
// Frontier is processed in (|index|, vertex id, sign) order so balls are
// deterministic. Hitting a cap is not an error: complete() turns false.
ComponentBall component_ball(const GBSGraph& g, const std::string& v,
                             const Integer& n, const BallLimits& limits);

// Centralizer C(z_v^n) as the fundamental group of the development
// component of (v, n): a presentation when the ball closed, otherwise the
// truncated ball alone.
struct CentralizerReport {
  ComponentBall ball;
  std::optional<Presentation> presentation;  // present iff ball.complete()

  bool complete() const { return ball.complete(); }
};

CentralizerReport centralizer_of_power(const GBSGraph& g, const std::string& v,
                                       const Integer& n, const BallLimits& limits);

// Word-level membership test for C(z_v^n): Britton-reduce w, then push z^n
// through edge by edge. Each step needs label(e_i') | current and scales
// current by label(e_i)/label(e_i'); membership iff every step divides and
// the product returns to n. Exact integer arithmetic throughout.
bool is_in_centralizer(const Word& w, const std::string& v, const Integer& n);

// Conjugacy of z_v^n and z_u^m among elliptic powers: same development
// component. Yes carries a witness with witness z_u^m witness^-1 = z_v^n.
// No needs one complete ball excluding the other vertex; otherwise Unknown.
enum class ConjugacyAnswer { Yes, No, Unknown };

struct ConjugacyResult {
  ConjugacyAnswer answer;
  std::optional<Word> witness;
};

const char* conjugacy_answer_name(ConjugacyAnswer a);

ConjugacyResult elliptic_conjugate(const GBSGraph& g, const std::string& v,
                                   const Integer& n, const std::string& u,
                                   const Integer& m, const BallLimits& limits);

// Deterministic sample of nontrivial elements of the centralizer the ball
// explores: the presentation-generator images extended by products and
// inverses, deduplicated by canonical form; at most `count` words.
std::vector<Word> centralizer_samples(const ComponentBall& ball, int count);

}  // namespace gog
