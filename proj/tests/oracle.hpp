#ifndef ABGROW_TESTS_ORACLE_HPP
#define ABGROW_TESTS_ORACLE_HPP

// Brute-force reference implementations used to pin down expected values.
// Everything here enumerates words or assignments directly, with no reuse
// of the production search structures, so disagreement points at the
// library.

#include "abgrow/abelian.hpp"

#include <map>
#include <set>
#include <vector>

namespace oracle {

using abgrow::AbelianStructure;
using abgrow::Element;
using abgrow::Word;

// next word of the same length in lex order; false when it wraps around
inline bool next_word(Word& w, int k) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (++w[i] < k) return true;
        w[i] = 0;
    }
    return false;
}

struct BallEntry {
    int length = 0; // geodesic length
    Word nf;        // shortlex-least word evaluating to the element
};

// scan all words in shortlex order; first hit per element wins
inline std::map<Element, BallEntry> ball(const AbelianStructure& g, int max_len) {
    std::map<Element, BallEntry> out;
    int k = g.alphabet().size();
    for (int len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            Element e = g.evaluate(w);
            if (!out.count(e)) out[e] = BallEntry{len, w};
        } while (next_word(w, k));
    }
    return out;
}

inline std::vector<long long> sphere_counts(const AbelianStructure& g, int max_len) {
    std::vector<long long> counts(max_len + 1, 0);
    for (const auto& [e, entry] : ball(g, max_len)) ++counts[entry.length];
    return counts;
}

// shortlex normal forms of length <= max_len
inline std::set<Word> language(const AbelianStructure& g, int max_len) {
    std::set<Word> out;
    for (const auto& [e, entry] : ball(g, max_len)) out.insert(entry.nf);
    return out;
}

// Morphism radius counts for a vertex set given by words: a placement g
// sends the base to g and vertex v to g + (v - base); its radius is the
// largest geodesic length over the placed vertices, and counts[j] is the
// number of placements of radius exactly j.  Enumerates words only.
inline std::vector<long long> morphism_counts(const AbelianStructure& g,
                                              const std::vector<Word>& vertex_words,
                                              const Word& base_word, int max_n) {
    int pad = 0;
    for (const Word& w : vertex_words)
        pad = std::max(pad, static_cast<int>(w.size() + base_word.size()));
    auto table = ball(g, max_n + pad);
    Element base = g.evaluate(base_word);
    std::vector<Element> offsets;
    for (const Word& w : vertex_words) offsets.push_back(g.sub(g.evaluate(w), base));
    std::vector<long long> counts(max_n + 1, 0);
    for (const auto& [e, entry] : table) {
        if (entry.length > max_n) continue;
        int m = 0;
        for (const Element& off : offsets) m = std::max(m, table.at(g.add(e, off)).length);
        if (m <= max_n) ++counts[m];
    }
    return counts;
}

} // namespace oracle

#endif
