#ifndef ABGROW_RELATIONS_HPP
#define ABGROW_RELATIONS_HPP

#include "abgrow/abelian.hpp"

#include <vector>

namespace abgrow {

// A minimal relation between two sorted words with disjoint letter
// support; lhs is the shortlex-greater side.  A sorted word is canonical
// exactly when it contains no lhs as a sub-multiset.
struct MinimalRelation {
    std::vector<int> lhs; // exponent per letter
    std::vector<int> rhs;
};

// sorted-word shortlex comparison on exponent vectors: first by total
// length, then the word with the larger exponent at the first differing
// letter is the lex-smaller one
bool shortlex_less_sorted(const std::vector<int>& u, const std::vector<int>& v);

Word sorted_word(const std::vector<int>& exponents);

// All minimal relations with exponents bounded by exponent_bound,
// enumerated meet-in-the-middle and filtered down to the sign-compatible
// componentwise-minimal kernel vectors.
std::vector<MinimalRelation> minimal_relations(const AbelianStructure& g, int exponent_bound);

enum class Extension { never, finite, infinite };

struct LetterClass {
    Extension kind;
    int max_copies; // meaningful for finite: copies of the letter that may follow
};

// How often the given letter may be appended to a canonical sorted prefix
// before the word stops being canonical.
LetterClass classify_letter(const std::vector<MinimalRelation>& rels,
                            const std::vector<int>& profile, int letter);

// Fellow-traveller bound: the largest prefix divergence between the two
// sides of a minimal relation, walked letter by letter with the shorter
// side held at its endpoint; at least 1.
int fellow_traveller_constant(const std::vector<MinimalRelation>& rels);

} // namespace abgrow

#endif
