#include "gog/word.hpp"

#include <sstream>

#include "gog/error.hpp"

namespace gog {

namespace {

void check_rep(const GBSGraph& g, const Word::Rep& rep) {
  size_t l = rep.edges.size();
  if (rep.vertices.size() != l + 1 || rep.exps.size() != l + 1)
    fail(ErrorCode::UnsoundWord, "syllable counts out of step");
  for (size_t i = 0; i <= l; ++i)
    if (rep.vertices[i] < 0 || rep.vertices[i] >= g.vertex_count())
      fail(ErrorCode::UnsoundWord, "vertex index out of range");
  for (size_t i = 0; i < l; ++i) {
    int e = rep.edges[i];
    if (e < 0 || e >= g.edge_count())
      fail(ErrorCode::UnsoundWord, "edge index out of range");
    if (g.initial(e) != rep.vertices[i] || g.terminal(e) != rep.vertices[i + 1])
      fail(ErrorCode::UnsoundWord,
           "edge " + g.edge_id(e) + " does not continue the path at syllable " +
               std::to_string(i));
  }
}

}  // namespace

Word Word::identity(const GBSGraph& g, const std::string& vertex) {
  return vertex_power(g, vertex, 0);
}

Word Word::vertex_power(const GBSGraph& g, const std::string& vertex, Integer exp) {
  Rep rep;
  rep.vertices.push_back(g.vertex_index(vertex));
  rep.exps.push_back(std::move(exp));
  return Word(&g, std::move(rep));
}

Word Word::edge_letter(const GBSGraph& g, const std::string& edge) {
  int e = g.edge_index(edge);
  Rep rep;
  rep.vertices = {g.initial(e), g.terminal(e)};
  rep.exps = {Integer(0), Integer(0)};
  rep.edges = {e};
  return Word(&g, std::move(rep));
}

Word Word::from_rep(const GBSGraph& g, Rep rep) {
  check_rep(g, rep);
  return Word(&g, std::move(rep));
}

Word word_from_trusted_rep(const GBSGraph& g, Word::Rep rep) {
  return Word(&g, std::move(rep));
}

Word Word::parse(const GBSGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string token;

  Rep rep;
  bool last_was_vertex = false;
  auto push_vertex = [&](int v, Integer exp) {
    if (last_was_vertex) {
      if (rep.vertices.back() != v)
        fail(ErrorCode::UnsoundWord,
             "adjacent vertex powers at different vertices: " + g.vertex_id(v));
      rep.exps.back() += exp;
    } else {
      rep.vertices.push_back(v);
      rep.exps.push_back(std::move(exp));
      last_was_vertex = true;
    }
  };

  while (in >> token) {
    size_t caret = token.find('^');
    std::string id = token.substr(0, caret);
    if (g.has_edge(id)) {
      if (caret != std::string::npos)
        fail(ErrorCode::SyntaxError, "edge letter with exponent: " + token);
      int e = g.edge_index(id);
      if (!last_was_vertex) {
        if (!rep.edges.empty() && g.terminal(rep.edges.back()) != g.initial(e))
          fail(ErrorCode::UnsoundWord, "edge " + id + " does not continue the path after " +
                                           g.edge_id(rep.edges.back()));
        // implicit zero syllable between consecutive edges / at the front
        rep.vertices.push_back(g.initial(e));
        rep.exps.push_back(0);
      } else if (rep.vertices.back() != g.initial(e)) {
        fail(ErrorCode::UnsoundWord,
             "edge " + id + " does not start at " + g.vertex_id(rep.vertices.back()));
      }
      rep.edges.push_back(e);
      last_was_vertex = false;
    } else if (g.has_vertex(id)) {
      Integer exp = 1;
      if (caret != std::string::npos) {
        std::string digits = token.substr(caret + 1);
        try {
          exp = Integer(digits);
        } catch (const std::exception&) {
          fail(ErrorCode::SyntaxError, "bad exponent in token: " + token);
        }
      }
      int v = g.vertex_index(id);
      if (!last_was_vertex && !rep.edges.empty() && g.terminal(rep.edges.back()) != v)
        fail(ErrorCode::UnsoundWord,
             "vertex " + id + " does not follow edge " + g.edge_id(rep.edges.back()));
      push_vertex(v, std::move(exp));
    } else {
      fail(ErrorCode::UnknownSymbol, "unknown symbol in word: " + id);
    }
  }
  if (rep.vertices.empty())
    fail(ErrorCode::UnsoundWord, "empty word (the identity needs an explicit vertex, e.g. v^0)");
  if (!last_was_vertex) {
    rep.vertices.push_back(g.terminal(rep.edges.back()));
    rep.exps.push_back(0);
  }
  return Word(&g, std::move(rep));
}

std::string Word::str() const {
  const GBSGraph& g = *graph_;
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& piece) {
    if (!first) out << ' ';
    out << piece;
    first = false;
  };
  for (size_t i = 0; i < rep_.vertices.size(); ++i) {
    const Integer& a = rep_.exps[i];
    if (a != 0) {
      if (a == 1)
        emit(g.vertex_id(rep_.vertices[i]));
      else
        emit(g.vertex_id(rep_.vertices[i]) + "^" + a.str());
    }
    if (i < rep_.edges.size()) emit(g.edge_id(rep_.edges[i]));
  }
  if (first) emit(g.vertex_id(rep_.vertices[0]) + "^0");
  return out.str();
}

bool Word::identical(const Word& other) const {
  return graph_ == other.graph_ && rep_.vertices == other.rep_.vertices &&
         rep_.exps == other.rep_.exps && rep_.edges == other.rep_.edges;
}

std::pair<std::string, std::string> check_sound(const Word& w) {
  return {w.graph().vertex_id(w.initial_vertex()),
          w.graph().vertex_id(w.terminal_vertex())};
}

}  // namespace gog
