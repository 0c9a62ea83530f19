#ifndef ABGROW_ACCEPTOR_HPP
#define ABGROW_ACCEPTOR_HPP

#include "abgrow/relations.hpp"

#include <string>
#include <vector>

namespace abgrow {

struct AcceptorState {
    std::vector<int> profile; // letter exponents, saturated at gamma
    int in_letter;            // letter read on entry, -1 for the start state
    int pred;                 // previous state on the tree path, -1 for the start
    int depth;                // shortest accepted length reaching the state
    int pumps;                // self-loop states on the path, this one included
    bool loop;                // has a self-loop on in_letter
};

// Word acceptor for the canonical (sorted shortlex-least) words, with
// letter exponents saturated at gamma.  States form a tree plus self
// loops: each state is reached by exactly one saturated profile, and a
// letter that may repeat forever loops at its gamma-th repetition.  All
// states accept; rejected words fall into an absorbing failure state.
class Acceptor {
public:
    static Acceptor build(const AbelianStructure& g, const std::vector<MinimalRelation>& rels,
                          int gamma);

    int gamma() const { return gamma_; }
    int size() const { return static_cast<int>(states_.size()); }
    int failure() const { return size(); }
    int start() const { return 0; }
    const AcceptorState& state(int i) const { return states_[i]; }

    int step(int state, int letter) const;
    int run(const Word& w) const; // final state, possibly failure()
    bool accepts(const Word& w) const { return run(w) != failure(); }

    std::string to_dot(const OrderedAlphabet& alphabet) const;

private:
    int gamma_ = 0;
    int num_letters_ = 0;
    std::vector<AcceptorState> states_;
    std::vector<int> next_; // size() * num_letters, -1 for failure
};

// Counts of letters mapping state i to state j, accept states only.
struct TransitionMatrix {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> rows; // (target, count)
};

TransitionMatrix transition_counts(const Acceptor& acc);

// Number of accepted words of each length ending at each state, advanced
// one letter at a time.
class WalkCounter {
public:
    explicit WalkCounter(const TransitionMatrix& m);
    void advance();
    int length() const { return length_; }
    const std::vector<unsigned long long>& counts() const { return counts_; }

private:
    const TransitionMatrix* m_;
    int length_ = 0;
    std::vector<unsigned long long> counts_, scratch_;
};

// walks of the given length from the start state to the given state
unsigned long long walk_count(const TransitionMatrix& m, int length, int state);

} // namespace abgrow

#endif
