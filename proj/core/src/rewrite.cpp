#include "gog/rewrite.hpp"

#include <utility>

#include "gog/error.hpp"

namespace gog {

namespace {

// Applies Britton moves left to right until none remains. Each move merges
// three syllables, so the scan backs up one slot after a hit.
bool britton_pass(const GBSGraph& g, Word::Rep& r) {
  bool changed = false;
  size_t j = 0;
  while (r.edges.size() >= 2 && j + 1 < r.edges.size()) {
    int e = r.edges[j];
    if (r.edges[j + 1] == GBSGraph::reverse(e) && divides(g.label(e), r.exps[j + 1])) {
      Integer pushed = g.label(GBSGraph::reverse(e)) * (r.exps[j + 1] / g.label(e));
      r.exps[j] += pushed + r.exps[j + 2];
      r.edges.erase(r.edges.begin() + j, r.edges.begin() + j + 2);
      r.exps.erase(r.exps.begin() + j + 1, r.exps.begin() + j + 3);
      r.vertices.erase(r.vertices.begin() + j + 1, r.vertices.begin() + j + 3);
      changed = true;
      if (j > 0) --j;
    } else {
      ++j;
    }
  }
  return changed;
}

// Right-to-left sweep: exps[i] (the syllable after edges[i-1]) is reduced
// into [0, |label|) and the quotient carried across the edge into exps[i-1].
// One pass leaves every syllable except the leading one in range.
bool range_sweep(const GBSGraph& g, Word::Rep& r) {
  bool changed = false;
  for (size_t i = r.edges.size(); i >= 1; --i) {
    int e = r.edges[i - 1];
    auto [q, rem] = divmod_nonneg(r.exps[i], g.label(e));
    if (q != 0) {
      r.exps[i] = std::move(rem);
      r.exps[i - 1] += q * g.label(GBSGraph::reverse(e));
      changed = true;
    }
  }
  return changed;
}

// Carries can change divisibility at a pinch, so reduction and sweeping
// alternate until a fixed point. Each Britton change shortens the word,
// which bounds the number of rounds.
void canonicalize(const GBSGraph& g, Word::Rep& r) {
  for (;;) {
    bool reduced = britton_pass(g, r);
    bool swept = range_sweep(g, r);
    if (!reduced && !swept) break;
  }
}

void require_same_graph(const Word& a, const Word& b) {
  if (!a.same_graph(b))
    fail(ErrorCode::GraphMismatch, "words live over different graphs");
}

}  // namespace

Word britton_reduce(const Word& w) {
  Word::Rep r = w.rep();
  britton_pass(w.graph(), r);
  return word_from_trusted_rep(w.graph(), std::move(r));
}

bool is_britton_reduced(const Word& w) {
  const Word::Rep& r = w.rep();
  const GBSGraph& g = w.graph();
  for (size_t j = 0; j + 1 < r.edges.size(); ++j) {
    int e = r.edges[j];
    if (r.edges[j + 1] == GBSGraph::reverse(e) && divides(g.label(e), r.exps[j + 1]))
      return false;
  }
  return true;
}

Word canonical_form(const Word& w) {
  Word::Rep r = w.rep();
  canonicalize(w.graph(), r);
  return word_from_trusted_rep(w.graph(), std::move(r));
}

bool is_canonical(const Word& w) {
  if (!is_britton_reduced(w)) return false;
  const Word::Rep& r = w.rep();
  const GBSGraph& g = w.graph();
  for (size_t i = 1; i < r.exps.size(); ++i) {
    const Integer& m = g.label(r.edges[i - 1]);
    if (r.exps[i] < 0 || r.exps[i] >= abs(m)) return false;
  }
  return true;
}

Word multiply(const Word& a, const Word& b) {
  require_same_graph(a, b);
  if (a.terminal_vertex() != b.initial_vertex())
    fail(ErrorCode::EndpointMismatch,
         "product needs terminal(" + a.str() + ") == initial(" + b.str() + ")");
  Word::Rep r = a.rep();
  const Word::Rep& s = b.rep();
  r.exps.back() += s.exps.front();
  r.vertices.insert(r.vertices.end(), s.vertices.begin() + 1, s.vertices.end());
  r.exps.insert(r.exps.end(), s.exps.begin() + 1, s.exps.end());
  r.edges.insert(r.edges.end(), s.edges.begin(), s.edges.end());
  canonicalize(a.graph(), r);
  return word_from_trusted_rep(a.graph(), std::move(r));
}

Word invert(const Word& w) {
  const Word::Rep& s = w.rep();
  Word::Rep r;
  r.vertices.assign(s.vertices.rbegin(), s.vertices.rend());
  for (auto it = s.exps.rbegin(); it != s.exps.rend(); ++it) r.exps.push_back(-*it);
  for (auto it = s.edges.rbegin(); it != s.edges.rend(); ++it)
    r.edges.push_back(GBSGraph::reverse(*it));
  canonicalize(w.graph(), r);
  return word_from_trusted_rep(w.graph(), std::move(r));
}

Word power(const Word& w, const Integer& n) {
  if (!w.closed())
    fail(ErrorCode::EndpointMismatch, "power needs a closed word");
  if (n < 0) return power(invert(w), -n);
  Word result = Word::identity(w.graph(), w.graph().vertex_id(w.initial_vertex()));
  Word base = canonical_form(w);
  Integer k = n;
  while (k > 0) {
    if ((k & 1) != 0) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

bool equals(const Word& a, const Word& b) {
  require_same_graph(a, b);
  if (a.initial_vertex() != b.initial_vertex() ||
      a.terminal_vertex() != b.terminal_vertex())
    fail(ErrorCode::EndpointMismatch, "equals needs words with equal endpoints");
  return canonical_form(a).identical(canonical_form(b));
}

bool commutes(const Word& a, const Word& b) {
  require_same_graph(a, b);
  if (!a.closed() || !b.closed() || a.initial_vertex() != b.initial_vertex())
    fail(ErrorCode::EndpointMismatch, "commutes needs closed words at one vertex");
  return multiply(a, b).identical(multiply(b, a));
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  if (!w.closed())
    fail(ErrorCode::EndpointMismatch, "cyclic_reduce needs a closed word");
  const GBSGraph& g = w.graph();
  Word::Rep r = w.rep();
  britton_pass(g, r);

  Word::Rep conj;
  conj.vertices = {r.vertices.front()};
  conj.exps = {Integer(0)};

  while (!r.edges.empty()) {
    // Move the leading syllable into the conjugator: w = g0 (rot) g0^{-1}.
    if (r.exps[0] != 0) {
      conj.exps.back() += r.exps[0];
      r.exps.back() += r.exps[0];
      r.exps[0] = 0;
    }
    int first = r.edges.front();
    int last = r.edges.back();
    if (r.edges.size() < 2 || first != GBSGraph::reverse(last) ||
        !divides(g.label(last), r.exps.back()))
      break;  // junction is not pinchable: cyclically reduced
    // Rotate the first edge to the back; the junction pinch then fires.
    conj.vertices.push_back(g.terminal(first));
    conj.exps.push_back(0);
    conj.edges.push_back(first);
    r.vertices.erase(r.vertices.begin());
    r.exps.erase(r.exps.begin());
    r.vertices.push_back(g.terminal(first));
    r.exps.push_back(0);
    r.edges.erase(r.edges.begin());
    r.edges.push_back(first);
    britton_pass(g, r);
  }
  canonicalize(g, conj);
  return {word_from_trusted_rep(g, std::move(r)),
          word_from_trusted_rep(g, std::move(conj))};
}

Ellipticity classify_element(const Word& w) {
  return cyclic_reduce(w).first.length() == 0 ? Ellipticity::Elliptic
                                              : Ellipticity::Hyperbolic;
}

const char* ellipticity_name(Ellipticity e) {
  return e == Ellipticity::Elliptic ? "elliptic" : "hyperbolic";
}

}  // namespace gog
