#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gog/development.hpp"
#include "gog/gbs_graph.hpp"
#include "gog/word.hpp"

namespace gog {

// Edge-letter substitution that fixes every vertex generator: edge e maps
// to a sound (initial(e), terminal(e)) word, reverses map to inverses, and
// every edge relation is preserved. Construction validates all of that, so
// a held endomorphism is always a well-defined map on the whole group.
class RelativeEndomorphism {
 public:
  // images: by edge id, any subset of orientations. Missing edges keep
  // their letter; a missing reverse is filled with the inverse image; when
  // both orientations are given they must be inverse to each other.
  static RelativeEndomorphism from_images(const GBSGraph& g,
                                          const std::map<std::string, Word>& images);
  static RelativeEndomorphism identity(const GBSGraph& g);

  const GBSGraph& graph() const { return *graph_; }
  const Word& image(int e) const { return images_[e]; }
  const Word& image(const std::string& edge) const;

  bool same_graph(const RelativeEndomorphism& o) const { return graph_ == o.graph_; }
  // Syllable-exact equality of all edge images (canonical forms are stored).
  bool identical(const RelativeEndomorphism& o) const;

 private:
  RelativeEndomorphism(const GBSGraph* g, std::vector<Word> images)
      : graph_(g), images_(std::move(images)) {}

  const GBSGraph* graph_;
  std::vector<Word> images_;  // by oriented edge index, canonical forms
};

// One centralizer element per vertex generator; vertices not listed get the
// trivial word. Keys are vertex ids of the (core) GBS graph.
using CentralizerAssignment = std::map<std::string, Word>;

// The centralizer twist of an assignment c: every edge e maps to
// c_{rho(e')} e c_{rho(e)}^-1 with rho(e) the generator at terminal(e).
// Returns the twist together with the twist of the inverted assignment;
// their composition is the exact identity. Throws NotInCentralizer when an
// assigned word does not centralize its vertex generator.
std::pair<RelativeEndomorphism, RelativeEndomorphism> twist_from_centralizers(
    const GBSGraph& g, const CentralizerAssignment& c);

// t1 after t2: images(e) = apply_to_word(t1, t2.image(e)).
RelativeEndomorphism compose(const RelativeEndomorphism& t1,
                             const RelativeEndomorphism& t2);

// Replace every edge letter by its image, keep vertex syllables, and
// canonicalize. Endpoints are preserved.
Word apply_to_word(const RelativeEndomorphism& t, const Word& w);

// True iff t fixes every sample exactly. Samples must centralize the
// generator of `vertex` (checked; NotInCentralizer otherwise). Twists
// produced by twist_from_centralizers whose assigned word at `vertex`
// commutes with the samples always pass; powers of the vertex generator
// are such assignments.
bool fixes_centralizer_check(const RelativeEndomorphism& t, const std::string& vertex,
                             const std::vector<Word>& samples);

// Witness a (one closed centralizer word per vertex, trivial when missing)
// for t2(e) = a_{initial(e)} t1(e) a_{terminal(e)}^-1 on every edge.
using EquivalenceWitness = std::map<std::string, Word>;

bool check_equivalence_witness(const RelativeEndomorphism& t1,
                               const RelativeEndomorphism& t2,
                               const EquivalenceWitness& w);

// Bounded search for a witness making t equivalent to the identity: per
// vertex, candidates are products of at most `bound` generators drawn from
// the explored centralizer ball of the vertex generator (its powers and
// ball-path elements). Deterministic; a result is a proof, absence within
// the bound is not. The combination space is capped, so very large graphs
// may exhaust the cap before the bound.
std::optional<EquivalenceWitness> search_identity_witness(
    const RelativeEndomorphism& t, int bound, const BallLimits& limits);

}  // namespace gog
