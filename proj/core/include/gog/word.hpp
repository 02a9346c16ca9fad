#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gog/gbs_graph.hpp"
#include "gog/integer.hpp"

namespace gog {

// Sound word g_0 e_1 g_1 ... e_l g_l over a GBS graph: vertex syllable i is
// z_{v_i}^{a_i} where v_0 = initial(e_1) and v_i = terminal(e_i). A length-0
// word is a single syllable at an explicit vertex (exponent 0 = identity).
//
// Words are immutable values; every operation returns a fresh word.
class Word {
 public:
  struct Rep {
    std::vector<int> vertices;   // l + 1
    std::vector<Integer> exps;   // l + 1
    std::vector<int> edges;      // l
  };

  static Word identity(const GBSGraph& g, const std::string& vertex);
  static Word vertex_power(const GBSGraph& g, const std::string& vertex, Integer exp);
  static Word edge_letter(const GBSGraph& g, const std::string& edge);
  // Validates alternation and soundness; throws UnsoundWord.
  static Word from_rep(const GBSGraph& g, Rep rep);
  // Token grammar: whitespace separated `r^k` (vertex/root power, `r` alone
  // = r^1), `e` (edge letter), `e'` (reverse edge letter).
  static Word parse(const GBSGraph& g, const std::string& text);

  const GBSGraph& graph() const { return *graph_; }
  const Rep& rep() const { return rep_; }
  int length() const { return static_cast<int>(rep_.edges.size()); }

  int initial_vertex() const { return rep_.vertices.front(); }
  int terminal_vertex() const { return rep_.vertices.back(); }
  bool closed() const { return initial_vertex() == terminal_vertex(); }
  bool trivial() const { return length() == 0 && rep_.exps[0] == 0; }

  std::string str() const;  // token grammar, parse(str()) reproduces the word

  bool same_graph(const Word& other) const { return graph_ == other.graph_; }
  bool identical(const Word& other) const;  // syllable-exact equality

 private:
  Word(const GBSGraph* g, Rep rep) : graph_(g), rep_(std::move(rep)) {}

  const GBSGraph* graph_;
  Rep rep_;

  friend Word word_from_trusted_rep(const GBSGraph& g, Word::Rep rep);
};

// Endpoints (initial vertex id, terminal vertex id).
std::pair<std::string, std::string> check_sound(const Word& w);

// Internal fast path: wraps a rep already known to be sound. Callers must
// guarantee alternation and endpoint continuity themselves.
Word word_from_trusted_rep(const GBSGraph& g, Word::Rep rep);

}  // namespace gog
