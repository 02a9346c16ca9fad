#include "gog/twist.hpp"

#include <algorithm>
#include <set>

#include "gog/error.hpp"
#include "gog/rewrite.hpp"

namespace gog {

namespace {

Word letter_word(const GBSGraph& g, int e) {
  return Word::edge_letter(g, g.edge_id(e));
}

void check_relation(const GBSGraph& g, int e, const Word& image) {
  if (image.initial_vertex() != g.initial(e) || image.terminal_vertex() != g.terminal(e))
    fail(ErrorCode::EndpointMismatch,
         "image of " + g.edge_id(e) + " must run from " + g.vertex_id(g.initial(e)) +
             " to " + g.vertex_id(g.terminal(e)));
  Word lhs = multiply(
      Word::vertex_power(g, g.vertex_id(g.initial(e)), g.label(GBSGraph::reverse(e))),
      image);
  Word rhs = multiply(image, Word::vertex_power(g, g.vertex_id(g.terminal(e)), g.label(e)));
  if (!lhs.identical(rhs))
    fail(ErrorCode::RelationNotPreserved,
         "image of " + g.edge_id(e) + " breaks the edge relation");
}

}  // namespace

RelativeEndomorphism RelativeEndomorphism::from_images(
    const GBSGraph& g, const std::map<std::string, Word>& images) {
  for (const auto& [id, w] : images) {
    if (!g.has_edge(id)) fail(ErrorCode::UnknownSymbol, "unknown edge " + id);
    if (&w.graph() != &g)
      fail(ErrorCode::GraphMismatch, "image of " + id + " lives over another graph");
  }
  std::vector<Word> table;
  table.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); e += 2) {
    auto fwd = images.find(g.edge_id(e));
    auto rev = images.find(g.edge_id(e + 1));
    Word a = fwd != images.end() ? canonical_form(fwd->second)
             : rev != images.end() ? invert(rev->second)
                                   : letter_word(g, e);
    Word b = rev != images.end() ? canonical_form(rev->second) : invert(a);
    if (!b.identical(invert(a)))
      fail(ErrorCode::BadInvolution,
           "images of " + g.edge_id(e) + " and " + g.edge_id(e + 1) +
               " are not inverse to each other");
    check_relation(g, e, a);
    table.push_back(std::move(a));
    table.push_back(std::move(b));
  }
  return RelativeEndomorphism(&g, std::move(table));
}

RelativeEndomorphism RelativeEndomorphism::identity(const GBSGraph& g) {
  return from_images(g, {});
}

const Word& RelativeEndomorphism::image(const std::string& edge) const {
  return images_[graph_->edge_index(edge)];
}

bool RelativeEndomorphism::identical(const RelativeEndomorphism& o) const {
  if (graph_ != o.graph_) return false;
  for (size_t e = 0; e < images_.size(); ++e)
    if (!images_[e].identical(o.images_[e])) return false;
  return true;
}

std::pair<RelativeEndomorphism, RelativeEndomorphism> twist_from_centralizers(
    const GBSGraph& g, const CentralizerAssignment& c) {
  for (const auto& [id, w] : c) {
    (void)w;
    if (!g.has_vertex(id)) fail(ErrorCode::UnknownSymbol, "unknown vertex " + id);
  }
  std::vector<Word> assigned, inverted;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.vertex_id(v);
    auto it = c.find(id);
    if (it == c.end()) {
      assigned.push_back(Word::identity(g, id));
      inverted.push_back(Word::identity(g, id));
      continue;
    }
    const Word& w = it->second;
    if (&w.graph() != &g)
      fail(ErrorCode::GraphMismatch, "assignment for " + id + " lives over another graph");
    if (!w.closed() || w.initial_vertex() != v)
      fail(ErrorCode::EndpointMismatch, "assignment for " + id + " must be closed at " + id);
    if (!is_in_centralizer(w, id, 1))
      fail(ErrorCode::NotInCentralizer,
           "assignment for " + id + " does not centralize its generator");
    assigned.push_back(canonical_form(w));
    inverted.push_back(invert(w));
  }

  auto build = [&](const std::vector<Word>& cw) {
    std::map<std::string, Word> images;
    for (int e = 0; e < g.edge_count(); e += 2) {
      Word img = multiply(multiply(cw[g.initial(e)], letter_word(g, e)),
                          invert(cw[g.terminal(e)]));
      images.emplace(g.edge_id(e), std::move(img));
    }
    return RelativeEndomorphism::from_images(g, images);
  };
  return {build(assigned), build(inverted)};
}

RelativeEndomorphism compose(const RelativeEndomorphism& t1,
                             const RelativeEndomorphism& t2) {
  if (!t1.same_graph(t2))
    fail(ErrorCode::GraphMismatch, "endomorphisms live over different graphs");
  const GBSGraph& g = t1.graph();
  std::map<std::string, Word> images;
  for (int e = 0; e < g.edge_count(); e += 2)
    images.emplace(g.edge_id(e), apply_to_word(t1, t2.image(e)));
  return RelativeEndomorphism::from_images(g, images);
}

Word apply_to_word(const RelativeEndomorphism& t, const Word& w) {
  if (&t.graph() != &w.graph())
    fail(ErrorCode::GraphMismatch, "word lives over another graph");
  const GBSGraph& g = t.graph();
  const Word::Rep& r = w.rep();
  Word out = Word::vertex_power(g, g.vertex_id(r.vertices[0]), r.exps[0]);
  for (size_t i = 0; i < r.edges.size(); ++i) {
    out = multiply(out, t.image(r.edges[i]));
    out = multiply(out, Word::vertex_power(g, g.vertex_id(r.vertices[i + 1]), r.exps[i + 1]));
  }
  return out;
}

bool fixes_centralizer_check(const RelativeEndomorphism& t, const std::string& vertex,
                             const std::vector<Word>& samples) {
  for (const Word& w : samples)
    if (!is_in_centralizer(w, vertex, 1))
      fail(ErrorCode::NotInCentralizer,
           "sample " + w.str() + " does not centralize " + vertex);
  for (const Word& w : samples)
    if (!equals(apply_to_word(t, w), w)) return false;
  return true;
}

bool check_equivalence_witness(const RelativeEndomorphism& t1,
                               const RelativeEndomorphism& t2,
                               const EquivalenceWitness& witness) {
  if (!t1.same_graph(t2))
    fail(ErrorCode::GraphMismatch, "endomorphisms live over different graphs");
  const GBSGraph& g = t1.graph();
  std::vector<Word> a;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.vertex_id(v);
    auto it = witness.find(id);
    if (it == witness.end()) {
      a.push_back(Word::identity(g, id));
      continue;
    }
    if (!it->second.closed() || it->second.initial_vertex() != v)
      fail(ErrorCode::EndpointMismatch, "witness for " + id + " must be closed at " + id);
    if (!is_in_centralizer(it->second, id, 1))
      fail(ErrorCode::NotInCentralizer,
           "witness for " + id + " does not centralize its generator");
    a.push_back(it->second);
  }
  for (int e = 0; e < g.edge_count(); e += 2) {
    Word expect = multiply(multiply(a[g.initial(e)], t1.image(e)), invert(a[g.terminal(e)]));
    if (!equals(t2.image(e), expect)) return false;
  }
  return true;
}

std::optional<EquivalenceWitness> search_identity_witness(
    const RelativeEndomorphism& t, int bound, const BallLimits& limits) {
  const GBSGraph& g = t.graph();
  RelativeEndomorphism id = RelativeEndomorphism::identity(g);

  // per-vertex candidate lists: trivial first, then products of ball
  // generators up to the bound, deduplicated by canonical form
  std::vector<std::vector<Word>> candidates;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& vid = g.vertex_id(v);
    ComponentBall ball = component_ball(g, vid, 1, limits);
    std::vector<Word> gens;
    for (const DevVertex& p : ball.vertices()) gens.push_back(ball.vertex_generator_word(p));
    for (const DevEdge& d : ball.non_tree_edges()) gens.push_back(ball.edge_generator_word(d));
    size_t ng = gens.size();
    for (size_t i = 0; i < ng; ++i) gens.push_back(invert(gens[i]));

    std::vector<Word> layer{Word::identity(g, vid)};
    std::vector<Word> all = layer;
    std::set<std::string> seen{all[0].str()};
    for (int len = 1; len <= bound; ++len) {
      std::vector<Word> next;
      for (const Word& w : layer)
        for (const Word& x : gens) {
          Word p = multiply(w, x);
          if (seen.insert(p.str()).second) {
            next.push_back(p);
            all.push_back(p);
          }
          if (all.size() > 400) break;
        }
      layer = std::move(next);
      if (all.size() > 400) break;
    }
    candidates.push_back(std::move(all));
  }

  // odometer over the per-vertex candidate lists, capped
  long long combos = 1;
  for (const auto& c : candidates) {
    combos *= static_cast<long long>(c.size());
    if (combos > 200000) {
      combos = 200000;
      break;
    }
  }
  std::vector<size_t> pick(candidates.size(), 0);
  for (long long step = 0; step < combos; ++step) {
    EquivalenceWitness w;
    for (size_t v = 0; v < pick.size(); ++v)
      w.emplace(g.vertex_id(static_cast<int>(v)), candidates[v][pick[v]]);
    if (check_equivalence_witness(id, t, w)) return w;
    size_t v = 0;
    while (v < pick.size() && ++pick[v] == candidates[v].size()) pick[v++] = 0;
    if (v == pick.size()) break;
  }
  return std::nullopt;
}

}  // namespace gog
