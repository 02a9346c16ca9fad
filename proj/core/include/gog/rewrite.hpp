#pragma once

#include <utility>

#include "gog/word.hpp"

namespace gog {

// One Britton move: whenever e_{i+1} = reverse(e_i) and label(e_i) divides
// the exponent a_i, the pinch e_i z^{a_i} e_{i+1} collapses to
// z^{label(reverse(e_i)) * a_i / label(e_i)} at initial(e_i). britton_reduce
// applies moves until none remains; the result is reduced and idempotent.
Word britton_reduce(const Word& w);
bool is_britton_reduced(const Word& w);

// Unique normal form: Britton-reduced with every syllable right of an edge
// normalized into [0, |label(e_i)|) by Euclidean division, carrying the
// quotient leftward across e_i via e z^{q*label(e)} = z^{q*label(e')} e.
// All carries accumulate in the leading syllable g_0. Two sound words with
// the same endpoints represent the same element iff their canonical forms
// are syllable-identical.
Word canonical_form(const Word& w);
bool is_canonical(const Word& w);

Word multiply(const Word& a, const Word& b);  // terminal(a) == initial(b)
Word invert(const Word& w);
Word power(const Word& w, const Integer& n);  // closed words

bool equals(const Word& a, const Word& b);    // same endpoints required
bool commutes(const Word& a, const Word& b);  // both closed at one vertex

// w == conjugator * core * invert(conjugator); the core is cyclically
// reduced: Britton-reduced, trivial leading syllable when length >= 1, and
// no move applies across the junction e_l g_l g_0 e_1. Its length is minimal
// in the conjugacy class of w.
std::pair<Word, Word> cyclic_reduce(const Word& w);  // (core, conjugator)

enum class Ellipticity { Elliptic, Hyperbolic };
Ellipticity classify_element(const Word& w);
const char* ellipticity_name(Ellipticity e);

}  // namespace gog
