#include <doctest.h>

#include "fixtures.hpp"
#include "gog/core_extraction.hpp"
#include "gog/error.hpp"
#include "gog/parse.hpp"
#include "gog/rewrite.hpp"
#include "gog/twist.hpp"

using namespace gog;

namespace {

RelativeEndomorphism endo(const GBSGraph& g, const std::string& edge, const std::string& image) {
  std::map<std::string, Word> images;
  images.emplace(edge, w(g, image));
  return RelativeEndomorphism::from_images(g, images);
}

}  // namespace

TEST_CASE("identity endomorphism keeps every letter") {
  GBSGraph g = bs24_graph();
  RelativeEndomorphism id = RelativeEndomorphism::identity(g);
  CHECK(id.image("t").str() == "t");
  CHECK(id.image("t'").str() == "t'");
  Word v = w(g, "a^3 t a t' a^-1");
  CHECK(equals(apply_to_word(id, v), v));
}

TEST_CASE("edge images must preserve the edge relation") {
  GBSGraph g = bs24_graph();
  CHECK_NOTHROW(endo(g, "t", "a^2 t a^-2"));
  CHECK_NOTHROW(endo(g, "t", "t a"));  // a^2 (t a) = (t a) a^4 holds
  CHECK_THROWS_WITH_AS(endo(g, "t", "t a t'"), doctest::Contains("relation"),
                       Error);
  CHECK_THROWS_AS(endo(g, "t", "t'"), Error);  // a^2 t' != t' a^4
  CHECK_THROWS_AS(endo(g, "t", "a^3"), Error);  // no edge letter at all
}

TEST_CASE("edge images are validated structurally") {
  GBSGraph fig = fig_graph();
  // wrong endpoints: e1 runs v -> u
  CHECK_THROWS_AS(endo(fig, "e1", "v^2"), Error);
  // unknown edge id
  GBSGraph g = bs24_graph();
  std::map<std::string, Word> bad;
  bad.emplace("zz", w(g, "a"));
  CHECK_THROWS_AS(RelativeEndomorphism::from_images(g, bad), Error);
  // image over a different graph instance
  GBSGraph other = bs24_graph();
  std::map<std::string, Word> foreign;
  foreign.emplace("t", w(other, "a^2 t a^-2"));
  CHECK_THROWS_AS(RelativeEndomorphism::from_images(g, foreign), Error);
}

TEST_CASE("explicit images for both orientations must be inverse") {
  GBSGraph g = bs24_graph();
  std::map<std::string, Word> images;
  images.emplace("t", w(g, "t"));
  images.emplace("t'", w(g, "t' a^2"));
  CHECK_THROWS_AS(RelativeEndomorphism::from_images(g, images), Error);

  // consistent pair is fine, and a lone reverse image fills the primary
  std::map<std::string, Word> rev_only;
  rev_only.emplace("t'", w(g, "a^2 t' a^-2"));
  RelativeEndomorphism t = RelativeEndomorphism::from_images(g, rev_only);
  CHECK(equals(t.image("t"), w(g, "a^2 t a^-2")));
}

TEST_CASE("twists by centralizer powers") {
  GBSGraph fig = fig_graph();
  CentralizerAssignment c;
  c.emplace("v", w(fig, "v^2"));
  c.emplace("u", w(fig, "u^3"));
  auto [t, tinv] = twist_from_centralizers(fig, c);

  CHECK(equals(t.image("e1"), w(fig, "v^2 e1 u^-3")));
  CHECK(equals(t.image("e2"), w(fig, "v^2 e2 u^-3")));
  CHECK(equals(t.image("e3"), w(fig, "u^3 e3 u^-3")));
  CHECK(equals(t.image("e1'"), w(fig, "u^3 e1' v^-2")));

  // the paired inverse twist composes to the exact identity both ways
  RelativeEndomorphism id = RelativeEndomorphism::identity(fig);
  CHECK(compose(t, tinv).identical(id));
  CHECK(compose(tinv, t).identical(id));
}

TEST_CASE("twist assignments are validated") {
  GBSGraph fig = fig_graph();
  GBSGraph g = bs24_graph();

  CentralizerAssignment unknown;
  unknown.emplace("zz", w(fig, "v"));
  CHECK_THROWS_AS(twist_from_centralizers(fig, unknown), Error);

  CentralizerAssignment open;
  open.emplace("v", w(fig, "e1"));  // runs v -> u, not closed
  CHECK_THROWS_AS(twist_from_centralizers(fig, open), Error);

  CentralizerAssignment outside;
  outside.emplace("a", w(g, "t"));  // t does not centralize a
  CHECK_THROWS_WITH_AS(twist_from_centralizers(g, outside),
                       doctest::Contains("centralize"), Error);

  CentralizerAssignment ball_element;
  ball_element.emplace("u", w(fig, "e3 u e3'"));
  CHECK_NOTHROW(twist_from_centralizers(fig, ball_element));
}

TEST_CASE("twists compose by multiplying the assignments") {
  GBSGraph fig = fig_graph();
  CentralizerAssignment c1, c2, prod;
  c1.emplace("u", w(fig, "e3 u e3'"));
  c2.emplace("u", w(fig, "u^-2"));
  c2.emplace("v", w(fig, "v"));
  prod.emplace("u", multiply(c1.at("u"), c2.at("u")));
  prod.emplace("v", w(fig, "v"));

  RelativeEndomorphism t1 = twist_from_centralizers(fig, c1).first;
  RelativeEndomorphism t2 = twist_from_centralizers(fig, c2).first;
  RelativeEndomorphism tp = twist_from_centralizers(fig, prod).first;
  CHECK(compose(t1, t2).identical(tp));

  RelativeEndomorphism id = RelativeEndomorphism::identity(fig);
  CHECK(compose(t1, id).identical(t1));
  CHECK(compose(id, t1).identical(t1));
}

TEST_CASE("applying a twist conjugates closed words by the assignment") {
  GBSGraph g = bs24_graph();
  CentralizerAssignment c;
  c.emplace("a", w(g, "a"));
  RelativeEndomorphism t = twist_from_centralizers(g, c).first;

  CHECK(equals(apply_to_word(t, w(g, "a^5")), w(g, "a^5")));
  CHECK(equals(apply_to_word(t, w(g, "t")), w(g, "a t a^-1")));
  Word v = w(g, "t a t'");
  CHECK(equals(apply_to_word(t, v), multiply(multiply(w(g, "a"), v), w(g, "a^-1"))));
  // t a t' does not commute with a, so it moves
  CHECK_FALSE(equals(apply_to_word(t, v), v));
}

TEST_CASE("centralizer fixing check") {
  GBSGraph g = bs24_graph();
  CentralizerAssignment c;
  c.emplace("a", w(g, "a^3"));
  RelativeEndomorphism t = twist_from_centralizers(g, c).first;
  CHECK(fixes_centralizer_check(t, "a", {w(g, "a^2"), w(g, "a^-7")}));

  // samples must centralize the vertex generator
  CHECK_THROWS_WITH_AS(fixes_centralizer_check(t, "a", {w(g, "t a t'")}),
                       doctest::Contains("centralize"), Error);

  // power-of-generator assignments fix the whole centralizer, element
  // assignments only fix what they commute with
  GBSGraph fig = fig_graph();
  std::vector<Word> samples{w(fig, "u^5"), w(fig, "e3 u e3'"),
                            w(fig, "e3 e1' v^3 e1 e3'")};
  CentralizerAssignment cp;
  cp.emplace("u", w(fig, "u^3"));
  CHECK(fixes_centralizer_check(twist_from_centralizers(fig, cp).first, "u", samples));

  CentralizerAssignment ce;
  ce.emplace("u", w(fig, "e3 u e3'"));
  CHECK_FALSE(
      fixes_centralizer_check(twist_from_centralizers(fig, ce).first, "u", samples));
}

TEST_CASE("equivalence witnesses") {
  GBSGraph g = bs24_graph();
  RelativeEndomorphism id = RelativeEndomorphism::identity(g);
  CentralizerAssignment c;
  c.emplace("a", w(g, "a"));
  RelativeEndomorphism t = twist_from_centralizers(g, c).first;

  EquivalenceWitness good;
  good.emplace("a", w(g, "a"));
  CHECK(check_equivalence_witness(id, t, good));

  EquivalenceWitness trivial;
  CHECK_FALSE(check_equivalence_witness(id, t, trivial));
  CHECK(check_equivalence_witness(t, t, trivial));

  EquivalenceWitness bad;
  bad.emplace("a", w(g, "t a t'"));  // not a centralizer element
  CHECK_THROWS_AS(check_equivalence_witness(id, t, bad), Error);

  // t |-> t a preserves the relation but is no twist: no power of a works
  RelativeEndomorphism skew = endo(g, "t", "t a");
  EquivalenceWitness probe;
  probe.emplace("a", w(g, "a^2"));
  CHECK_FALSE(check_equivalence_witness(id, skew, probe));
}

TEST_CASE("identity witness search") {
  GBSGraph g = bs24_graph();
  RelativeEndomorphism t = endo(g, "t", "a^2 t a^-2");
  auto found = search_identity_witness(t, 4, {});
  REQUIRE(found.has_value());
  CHECK(check_equivalence_witness(RelativeEndomorphism::identity(g), t, *found));
  CHECK(equals(found->at("a"), w(g, "a^2")));

  auto trivial = search_identity_witness(RelativeEndomorphism::identity(g), 1, {});
  REQUIRE(trivial.has_value());
  CHECK(trivial->at("a").trivial());

  RelativeEndomorphism skew = endo(g, "t", "t a");
  CHECK_FALSE(search_identity_witness(skew, 3, {}).has_value());
}

TEST_CASE("twists stay inside a core component") {
  GraphOfGroupsSpec spec = parse_spec(slurp(fixture_path("reduction.json")));
  CoreDecomposition core = extract_core(spec);
  const GBSGraph& d2 = core.components[1];

  CentralizerAssignment c;
  c.emplace("rho3", w(d2, "rho3^2"));
  RelativeEndomorphism t = twist_from_centralizers(d2, c).first;
  CHECK(equals(t.image("f1"), w(d2, "f1 rho3^-2")));
  CHECK(equals(t.image("f4"), w(d2, "rho3^2 f4")));
  CHECK(equals(t.image("f5"), w(d2, "f5")));
  CHECK(t.image("f1").initial_vertex() == d2.vertex_index("rho2"));
  CHECK(t.image("f1").terminal_vertex() == d2.vertex_index("rho3"));
}
