#include "abgrow/relations.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace abgrow {

namespace {

using Vec = std::vector<int>;

Element combination(const AbelianStructure& g, const Vec& coeffs, int first_letter) {
    Element e = g.zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i];
        int letter = first_letter + static_cast<int>(i);
        const Element& img = c >= 0 ? g.image(letter) : g.negate(g.image(letter));
        for (int t = 0; t < std::abs(c); ++t) e = g.add(e, img);
    }
    return e;
}

// odometer over [-bound, bound]^len; returns false after the last vector
bool next_vec(Vec& v, int bound) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] <= bound) return true;
        v[i] = -bound;
    }
    return false;
}

long l1(const Vec& v) {
    long s = 0;
    for (int x : v) s += std::abs(x);
    return s;
}

// m fits inside delta: sign-compatible and componentwise no larger
bool fits(const Vec& m, const Vec& delta, bool negated) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        int mi = negated ? -m[i] : m[i];
        if (mi > 0 && delta[i] < mi) return false;
        if (mi < 0 && delta[i] > mi) return false;
    }
    return true;
}

} // namespace

bool shortlex_less_sorted(const Vec& u, const Vec& v) {
    long lu = 0, lv = 0;
    for (int x : u) lu += x;
    for (int x : v) lv += x;
    if (lu != lv) return lu < lv;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return u[i] > v[i];
    return false;
}

Word sorted_word(const Vec& exponents) {
    Word w;
    for (std::size_t letter = 0; letter < exponents.size(); ++letter)
        for (int t = 0; t < exponents[letter]; ++t) w.push_back(static_cast<int>(letter));
    return w;
}

std::vector<MinimalRelation> minimal_relations(const AbelianStructure& g, int exponent_bound) {
    if (exponent_bound < 1) fail(errc::validation, "exponent bound must be positive");
    int k = g.alphabet().size();
    int half = k / 2;

    double box = 1.0;
    for (int i = 0; i < k - half; ++i) box *= 2.0 * exponent_bound + 1.0;
    if (box > 5e7) fail(errc::resource, "relation search space too large");

    std::unordered_map<Element, std::vector<Vec>, ElementHash> right;
    {
        Vec r(k - half, -exponent_bound);
        do {
            right[combination(g, r, half)].push_back(r);
        } while (next_vec(r, exponent_bound));
    }

    std::vector<Vec> candidates;
    {
        Vec l(half, -exponent_bound);
        do {
            auto it = right.find(g.negate(combination(g, l, 0)));
            if (it == right.end()) continue;
            for (const Vec& r : it->second) {
                Vec delta(l);
                delta.insert(delta.end(), r.begin(), r.end());
                int first = 0;
                for (int x : delta) {
                    if (x != 0) { first = x; break; }
                }
                if (first > 0) candidates.push_back(std::move(delta));
            }
        } while (next_vec(l, exponent_bound));
    }

    std::sort(candidates.begin(), candidates.end(), [](const Vec& a, const Vec& b) {
        long la = l1(a), lb = l1(b);
        return la != lb ? la < lb : a < b;
    });

    std::vector<Vec> kept;
    for (const Vec& delta : candidates) {
        bool dominated = false;
        for (const Vec& m : kept)
            if (fits(m, delta, false) || fits(m, delta, true)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(delta);
    }

    std::vector<MinimalRelation> out;
    for (const Vec& delta : kept) {
        Vec pos(k, 0), neg(k, 0);
        for (int i = 0; i < k; ++i) {
            if (delta[i] > 0) pos[i] = delta[i];
            if (delta[i] < 0) neg[i] = -delta[i];
        }
        if (shortlex_less_sorted(pos, neg))
            out.push_back(MinimalRelation{std::move(neg), std::move(pos)});
        else
            out.push_back(MinimalRelation{std::move(pos), std::move(neg)});
    }
    return out;
}

LetterClass classify_letter(const std::vector<MinimalRelation>& rels, const Vec& profile,
                            int letter) {
    int k = static_cast<int>(profile.size());
    for (int x = letter + 1; x < k; ++x)
        if (profile[x] > 0) return {Extension::never, 0};

    int best = std::numeric_limits<int>::max();
    for (const MinimalRelation& rel : rels) {
        bool applicable = true;
        for (int x = 0; x < k; ++x)
            if (x != letter && rel.lhs[x] > profile[x]) {
                applicable = false;
                break;
            }
        if (applicable) best = std::min(best, rel.lhs[letter] - profile[letter]);
    }
    if (best == std::numeric_limits<int>::max()) return {Extension::infinite, 0};
    if (best <= 0) fail(errc::internal, "letter classification on a non-canonical prefix");
    if (best == 1) return {Extension::never, 0};
    return {Extension::finite, best - 1};
}

int fellow_traveller_constant(const std::vector<MinimalRelation>& rels) {
    int kappa = 1;
    for (const MinimalRelation& rel : rels) {
        Word u = sorted_word(rel.lhs), w = sorted_word(rel.rhs);
        int k = static_cast<int>(rel.lhs.size());
        Vec pu(k, 0), pw(k, 0);
        std::size_t steps = std::max(u.size(), w.size());
        for (std::size_t t = 0; t < steps; ++t) {
            if (t < u.size()) ++pu[u[t]];
            if (t < w.size()) ++pw[w[t]];
            int divergence = 0;
            for (int i = 0; i < k; ++i) divergence += std::abs(pu[i] - pw[i]);
            kappa = std::max(kappa, divergence);
        }
    }
    return kappa;
}

} // namespace abgrow
