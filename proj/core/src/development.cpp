#include "gog/development.hpp"

#include <algorithm>
#include <set>

#include "gog/error.hpp"
#include "gog/rewrite.hpp"

namespace gog {

DevVertex dev_initial(const GBSGraph& g, const DevEdge& d) {
  return {g.initial(d.edge), d.index * g.label(GBSGraph::reverse(d.edge))};
}

DevVertex dev_terminal(const GBSGraph& g, const DevEdge& d) {
  return {g.terminal(d.edge), d.index * g.label(d.edge)};
}

DevEdge dev_reverse(const DevEdge& d) { return {GBSGraph::reverse(d.edge), d.index}; }

std::string dev_vertex_id(const GBSGraph& g, const DevVertex& p) {
  return g.vertex_id(p.vertex) + "@" + to_string(p.index);
}

std::string dev_edge_id(const GBSGraph& g, const DevEdge& d) {
  return g.edge_id(d.edge) + "@" + to_string(d.index);
}

std::vector<DevEdge> dev_incident(const GBSGraph& g, const DevVertex& p) {
  if (p.index == 0) fail(ErrorCode::ZeroLabel, "development index must be nonzero");
  std::vector<int> into;
  for (int o : g.out_edges(p.vertex)) into.push_back(GBSGraph::reverse(o));
  std::sort(into.begin(), into.end(),
            [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });
  std::vector<DevEdge> out;
  for (int e : into)
    if (divides(g.label(e), p.index)) out.push_back({e, p.index / g.label(e)});
  return out;
}

namespace {

// Frontier ordering: (|index|, vertex id, positive before negative).
struct FrontierKey {
  Integer mag;
  std::string vid;
  int neg;
  DevVertex at;

  bool operator<(const FrontierKey& o) const {
    if (mag != o.mag) return mag < o.mag;
    if (vid != o.vid) return vid < o.vid;
    return neg < o.neg;
  }
};

FrontierKey frontier_key(const GBSGraph& g, const DevVertex& p) {
  return {abs(p.index), g.vertex_id(p.vertex), p.index < 0 ? 1 : 0, p};
}

void add_ball_edge(GBSGraph& ball, const GBSGraph& g, const DevEdge& d) {
  ball.add_edge(dev_edge_id(g, d), dev_edge_id(g, dev_reverse(d)),
                dev_vertex_id(g, dev_initial(g, d)), dev_vertex_id(g, dev_terminal(g, d)),
                g.label(GBSGraph::reverse(d.edge)), g.label(d.edge));
}

}  // namespace

int ComponentBall::position(const DevVertex& p) const {
  auto it = pos_.find({p.vertex, p.index});
  if (it == pos_.end())
    fail(ErrorCode::UnknownSymbol,
         "development vertex " + dev_vertex_id(*base_, p) + " is not in the ball");
  return it->second;
}

bool ComponentBall::contains(const std::string& vertex, const Integer& index) const {
  if (!base_->has_vertex(vertex)) return false;
  return pos_.count({base_->vertex_index(vertex), index}) != 0;
}

Word ComponentBall::path_word(const std::string& vertex, const Integer& index) const {
  int cur = position({base_->vertex_index(vertex), index});
  std::vector<int> letters;
  while (parent_[cur]) {
    const DevEdge& d = *parent_[cur];
    letters.push_back(d.edge);
    cur = position(dev_initial(*base_, d));
  }
  std::reverse(letters.begin(), letters.end());
  Word::Rep r;
  r.vertices.push_back(base_vertex_.vertex);
  r.exps.push_back(0);
  for (int e : letters) {
    r.edges.push_back(e);
    r.vertices.push_back(base_->terminal(e));
    r.exps.push_back(0);
  }
  return word_from_trusted_rep(*base_, std::move(r));
}

Word ComponentBall::vertex_generator_word(const DevVertex& p) const {
  Word x = path_word(base_->vertex_id(p.vertex), p.index);
  Word z = Word::vertex_power(*base_, base_->vertex_id(p.vertex), 1);
  return multiply(multiply(x, z), invert(x));
}

Word ComponentBall::edge_generator_word(const DevEdge& d) const {
  DevVertex a = dev_initial(*base_, d);
  DevVertex b = dev_terminal(*base_, d);
  Word xa = path_word(base_->vertex_id(a.vertex), a.index);
  Word xb = path_word(base_->vertex_id(b.vertex), b.index);
  Word letter = Word::edge_letter(*base_, base_->edge_id(d.edge));
  return multiply(multiply(xa, letter), invert(xb));
}

std::map<std::string, std::string> ComponentBall::dot_labels() const {
  std::map<std::string, std::string> labels;
  for (const DevVertex& p : order_)
    labels[dev_vertex_id(*base_, p)] =
        "(" + base_->vertex_id(p.vertex) + "," + to_string(p.index) + ")";
  return labels;
}

ComponentBall component_ball(const GBSGraph& g, const std::string& v,
                             const Integer& n, const BallLimits& limits) {
  if (n == 0) fail(ErrorCode::ZeroLabel, "development index must be nonzero");
  ComponentBall ball;
  ball.base_ = &g;
  ball.base_vertex_ = {g.vertex_index(v), n};

  std::set<FrontierKey> frontier;
  std::map<std::pair<int, Integer>, std::optional<DevEdge>> discovered;
  frontier.insert(frontier_key(g, ball.base_vertex_));
  discovered[{ball.base_vertex_.vertex, ball.base_vertex_.index}] = std::nullopt;

  bool horizon = false;
  while (!frontier.empty()) {
    if (static_cast<int>(ball.order_.size()) >= limits.max_vertices) break;
    DevVertex p = frontier.begin()->at;
    frontier.erase(frontier.begin());
    int posn = static_cast<int>(ball.order_.size());
    ball.order_.push_back(p);
    ball.pos_[{p.vertex, p.index}] = posn;
    ball.parent_.push_back(discovered.at({p.vertex, p.index}));
    ball.graph_.add_vertex(dev_vertex_id(g, p));

    for (const DevEdge& d : dev_incident(g, p)) {
      DevVertex q = dev_initial(g, d);
      if (q == p) {
        // development loop: both orientations are incident here, keep one
        if (g.primary(d.edge) == d.edge) {
          add_ball_edge(ball.graph_, g, d);
          ball.extra_.push_back(d);
        }
        continue;
      }
      auto qk = std::make_pair(q.vertex, q.index);
      auto in_ball = ball.pos_.find(qk);
      if (in_ball != ball.pos_.end()) {
        // both endpoints settled: the edge enters the ball graph exactly once
        add_ball_edge(ball.graph_, g, d);
        const auto& par = ball.parent_[posn];
        if (!(par && *par == d)) ball.extra_.push_back(d);
        continue;
      }
      if (discovered.count(qk)) continue;  // queued; handled when q settles
      if (abs(q.index) > limits.max_abs_index) {
        horizon = true;
        continue;
      }
      discovered[qk] = dev_reverse(d);  // tree edge parent -> q
      frontier.insert(frontier_key(g, q));
    }
  }
  ball.complete_ = frontier.empty() && !horizon;
  return ball;
}

CentralizerReport centralizer_of_power(const GBSGraph& g, const std::string& v,
                                       const Integer& n, const BallLimits& limits) {
  CentralizerReport report{component_ball(g, v, n, limits), std::nullopt};
  if (report.ball.complete())
    report.presentation = pi1_presentation(report.ball.graph());
  return report;
}

bool is_in_centralizer(const Word& w, const std::string& v, const Integer& n) {
  if (n == 0) fail(ErrorCode::ZeroLabel, "centralizer of a trivial power");
  const GBSGraph& g = w.graph();
  int vi = g.vertex_index(v);
  if (!w.closed() || w.initial_vertex() != vi)
    fail(ErrorCode::EndpointMismatch, "word must be closed at " + v);
  Word r = britton_reduce(w);
  Integer cur = n;
  for (int e : r.rep().edges) {
    const Integer& down = g.label(GBSGraph::reverse(e));
    if (!divides(down, cur)) return false;
    cur = cur / down * g.label(e);
  }
  return cur == n;
}

const char* conjugacy_answer_name(ConjugacyAnswer a) {
  switch (a) {
    case ConjugacyAnswer::Yes: return "yes";
    case ConjugacyAnswer::No: return "no";
    default: return "unknown";
  }
}

ConjugacyResult elliptic_conjugate(const GBSGraph& g, const std::string& v,
                                   const Integer& n, const std::string& u,
                                   const Integer& m, const BallLimits& limits) {
  ComponentBall a = component_ball(g, v, n, limits);
  if (a.contains(u, m)) return {ConjugacyAnswer::Yes, a.path_word(u, m)};
  if (a.complete()) return {ConjugacyAnswer::No, std::nullopt};
  ComponentBall b = component_ball(g, u, m, limits);
  if (b.contains(v, n)) return {ConjugacyAnswer::Yes, invert(b.path_word(v, n))};
  if (b.complete()) return {ConjugacyAnswer::No, std::nullopt};
  return {ConjugacyAnswer::Unknown, std::nullopt};
}

std::vector<Word> centralizer_samples(const ComponentBall& ball, int count) {
  std::vector<Word> pool;
  std::set<std::string> seen;
  auto add = [&](const Word& w) {
    Word c = canonical_form(w);
    if (c.trivial()) return;
    if (seen.insert(c.str()).second) pool.push_back(std::move(c));
  };
  for (const DevVertex& p : ball.vertices()) add(ball.vertex_generator_word(p));
  for (const DevEdge& d : ball.non_tree_edges()) add(ball.edge_generator_word(d));
  for (int round = 0; static_cast<int>(pool.size()) < count && round < 8; ++round) {
    size_t sz = pool.size();
    for (size_t i = 0; i < sz && static_cast<int>(pool.size()) < count; ++i) {
      add(multiply(pool[i], pool[(i + 1) % sz]));
      if (static_cast<int>(pool.size()) < count) add(invert(pool[i]));
    }
  }
  if (static_cast<int>(pool.size()) > count)
    pool.erase(pool.begin() + count, pool.end());
  return pool;
}

}  // namespace gog
