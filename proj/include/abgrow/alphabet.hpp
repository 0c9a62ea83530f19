#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abgrow {

// A word is a sequence of letter indices into an OrderedAlphabet.
using Word = std::vector<int>;

struct Letter {
    std::string symbol;
    int inverse = -1; // index of the inverse letter; may equal the letter's own index
};

// Symmetric generating set with a fixed total order (the shortlex order of the
// letters is their position in this list).
class OrderedAlphabet {
public:
    OrderedAlphabet() = default;
    OrderedAlphabet(std::vector<std::string> symbols,
                    const std::vector<std::pair<std::string, std::string>>& inverse_pairs);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& symbol(int i) const { return letters_[i].symbol; }
    int inverse(int i) const { return letters_[i].inverse; }
    bool self_inverse(int i) const { return letters_[i].inverse == i; }
    int self_inverse_count() const;

    // -1 when the symbol is not declared.
    int find(std::string_view symbol) const;

    // Greedy longest-match tokenization; throws on any unmatched residue.
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word& w) const; // "" for the empty word

private:
    std::vector<Letter> letters_;
};

struct GroupSpec {
    OrderedAlphabet alphabet;
    std::vector<Word> relators;
};

// Accepts either the line format (`gens`/`inv`/`rel` statements, separated by
// newlines or semicolons, `#` comments) or a JSON object with "generators",
// "inverses", "relators".
GroupSpec parse_group_spec(const std::string& text);

// Sum of declared relator lengths.
long mu(const GroupSpec& spec);
// mu plus 2 per self-inverse letter (each contributes an implicit square
// relator to the relation matrix); used for default bounds.
long mu_effective(const GroupSpec& spec);

} // namespace abgrow
