#include "abgrow/acceptor.hpp"
#include "abgrow/errors.hpp"

#include <sstream>

namespace abgrow {

Acceptor Acceptor::build(const AbelianStructure& g, const std::vector<MinimalRelation>& rels,
                         int gamma) {
    if (gamma < 1) fail(errc::validation, "gamma must be positive");
    for (const MinimalRelation& rel : rels)
        for (int e : rel.lhs)
            if (e > gamma)
                fail(errc::validation, "gamma is below the largest relation exponent");

    Acceptor acc;
    acc.gamma_ = gamma;
    int k = acc.num_letters_ = g.alphabet().size();

    auto add_state = [&](AcceptorState s) {
        acc.states_.push_back(std::move(s));
        acc.next_.resize(acc.states_.size() * k, -1);
        return static_cast<int>(acc.states_.size()) - 1;
    };
    auto next_of = [&](int s, int b) -> int& { return acc.next_[std::size_t(s) * k + b]; };

    add_state(AcceptorState{std::vector<int>(k, 0), -1, -1, 0, 0, false});

    for (int s = 0; s < static_cast<int>(acc.states_.size()); ++s) {
        for (int b = acc.states_[s].in_letter + 1; b < k; ++b) {
            LetterClass c = classify_letter(rels, acc.states_[s].profile, b);
            if (c.kind == Extension::never) continue; // stays at failure
            int copies = c.kind == Extension::finite ? c.max_copies : gamma;
            if (copies > gamma) fail(errc::internal, "letter bound exceeds gamma");
            int prev = s;
            for (int t = 1; t <= copies; ++t) {
                AcceptorState st;
                st.profile = acc.states_[prev].profile;
                st.profile[b] += 1;
                st.in_letter = b;
                st.pred = prev;
                st.depth = acc.states_[s].depth + t;
                st.pumps = acc.states_[s].pumps;
                st.loop = false;
                int idx = add_state(std::move(st));
                next_of(prev, b) = idx;
                prev = idx;
            }
            if (c.kind == Extension::infinite) {
                acc.states_[prev].loop = true;
                acc.states_[prev].pumps += 1;
                next_of(prev, b) = prev;
            }
        }
    }
    return acc;
}

int Acceptor::step(int state, int letter) const {
    if (state == failure()) return failure();
    int t = next_[std::size_t(state) * num_letters_ + letter];
    return t < 0 ? failure() : t;
}

int Acceptor::run(const Word& w) const {
    int s = start();
    for (int letter : w) {
        s = step(s, letter);
        if (s == failure()) return s;
    }
    return s;
}

std::string Acceptor::to_dot(const OrderedAlphabet& alphabet) const {
    std::ostringstream out;
    out << "digraph acceptor {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int s = 0; s < size(); ++s) {
        out << "  q" << s << " [label=\"" << s << "\"";
        if (s == start()) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (int s = 0; s < size(); ++s)
        for (int b = 0; b < num_letters_; ++b) {
            int t = step(s, b);
            if (t == failure()) continue;
            out << "  q" << s << " -> q" << t << " [label=\"" << alphabet.symbol(b) << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

TransitionMatrix transition_counts(const Acceptor& acc) {
    TransitionMatrix m;
    m.n = acc.size();
    m.rows.resize(m.n);
    for (int s = 0; s < m.n; ++s) {
        int k = static_cast<int>(acc.state(s).profile.size());
        for (int b = 0; b < k; ++b) {
            int t = acc.step(s, b);
            if (t == acc.failure()) continue;
            bool merged = false;
            for (auto& [target, count] : m.rows[s])
                if (target == t) {
                    ++count;
                    merged = true;
                    break;
                }
            if (!merged) m.rows[s].emplace_back(t, 1);
        }
    }
    return m;
}

WalkCounter::WalkCounter(const TransitionMatrix& m) : m_(&m), counts_(m.n, 0), scratch_(m.n, 0) {
    if (m.n > 0) counts_[0] = 1;
}

void WalkCounter::advance() {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (int s = 0; s < m_->n; ++s) {
        if (counts_[s] == 0) continue;
        for (const auto& [target, count] : m_->rows[s]) {
            unsigned long long add;
            if (__builtin_mul_overflow(counts_[s], static_cast<unsigned long long>(count), &add) ||
                __builtin_add_overflow(scratch_[target], add, &scratch_[target]))
                fail(errc::resource, "walk count overflow");
        }
    }
    counts_.swap(scratch_);
    ++length_;
}

unsigned long long walk_count(const TransitionMatrix& m, int length, int state) {
    if (length < 0) return 0;
    WalkCounter wc(m);
    for (int i = 0; i < length; ++i) wc.advance();
    return wc.counts().at(state);
}

} // namespace abgrow
