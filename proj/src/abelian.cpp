#include "abgrow/abelian.hpp"
#include "abgrow/ball.hpp"
#include "abgrow/errors.hpp"

#include <limits>

namespace abgrow {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::resource, "element coordinate overflow");
    return r;
}

long long mod_into(long long x, long long d) {
    long long r = x % d;
    return r < 0 ? r + d : r;
}

long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) fail(errc::resource, std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(z.get_si());
}

} // namespace

std::size_t ElementHash::operator()(const Element& e) const {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (long long v : e) {
        std::uint64_t z = h + 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(v);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

AbelianStructure AbelianStructure::derive(const GroupSpec& spec) {
    AbelianStructure g;
    g.alphabet_ = spec.alphabet;
    int k = spec.alphabet.size();
    g.pair_of_.assign(k, -1);
    g.sign_of_.assign(k, 0);
    std::vector<int> self_inverse_pairs;
    for (int i = 0; i < k; ++i) {
        if (g.pair_of_[i] >= 0) continue;
        int p = g.num_pairs_++;
        g.pair_of_[i] = p;
        g.sign_of_[i] = 1;
        int inv = spec.alphabet.inverse(i);
        if (inv == i) {
            self_inverse_pairs.push_back(p);
        } else {
            g.pair_of_[inv] = p;
            g.sign_of_[inv] = -1;
        }
    }

    int m = g.num_pairs_;
    Mat rel;
    for (const Word& r : spec.relators) {
        std::vector<mpz_class> row(m, 0);
        for (int letter : r) row[g.pair_of_[letter]] += g.sign_of_[letter];
        rel.push_back(std::move(row));
    }
    for (int p : self_inverse_pairs) {
        std::vector<mpz_class> row(m, 0);
        row[p] = 2;
        rel.push_back(std::move(row));
    }

    SmithResult snf = smith_normal_form(rel, m);

    // diagonal entry for each canonical coordinate; columns beyond the
    // diagonal are zero columns
    int diag = std::min(static_cast<int>(rel.size()), m);
    std::vector<long long> d(m, 0);
    for (int i = 0; i < diag; ++i) d[i] = to_ll(snf.d[i][i], "invariant factor");

    // coordinate layout: entries with d == 1 are dropped, d >= 2 become
    // torsion slots, d == 0 become free slots (free slots listed first)
    std::vector<int> slot(m, -1);
    g.rank_ = 0;
    for (int j = 0; j < m; ++j) {
        if (d[j] == 0)
            slot[j] = g.rank_++;
        else if (d[j] >= 2)
            g.moduli_.push_back(d[j]);
    }
    int t = 0;
    for (int j = 0; j < m; ++j)
        if (d[j] >= 2) slot[j] = g.rank_ + t++;

    g.order_ = g.rank_ > 0 ? 0 : 1;
    if (g.rank_ == 0)
        for (long long mod : g.moduli_) g.order_ *= mpz_class(static_cast<long>(mod));

    // image of pair p in canonical coordinates is row p of V, projected
    g.images_.assign(k, g.zero());
    for (int letter = 0; letter < k; ++letter) {
        Element img = g.zero();
        int p = g.pair_of_[letter];
        for (int j = 0; j < m; ++j) {
            if (slot[j] < 0) continue;
            long long v = to_ll(snf.v[p][j], "canonical coordinate");
            v *= g.sign_of_[letter];
            img[slot[j]] = d[j] == 0 ? v : mod_into(v, d[j]);
        }
        g.images_[letter] = std::move(img);
    }

    for (const Word& r : spec.relators)
        if (!g.is_zero(g.evaluate(r))) fail(errc::internal, "relator does not vanish");
    for (int letter = 0; letter < k; ++letter)
        if (!g.is_zero(g.add(g.image(letter), g.image(spec.alphabet.inverse(letter)))))
            fail(errc::internal, "letter images are not inverse");

    return g;
}

Element AbelianStructure::add(const Element& a, const Element& b) const {
    Element r(width());
    for (int i = 0; i < rank_; ++i) r[i] = checked_add(a[i], b[i]);
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        std::size_t i = rank_ + t;
        r[i] = mod_into(a[i] + b[i], moduli_[t]);
    }
    return r;
}

Element AbelianStructure::step(const Element& e, int letter) const {
    return add(e, images_[letter]);
}

Element AbelianStructure::negate(const Element& e) const {
    Element r(width());
    for (int i = 0; i < rank_; ++i) {
        if (e[i] == std::numeric_limits<long long>::min())
            fail(errc::resource, "element coordinate overflow");
        r[i] = -e[i];
    }
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        std::size_t i = rank_ + t;
        r[i] = mod_into(-e[i], moduli_[t]);
    }
    return r;
}

Element AbelianStructure::sub(const Element& a, const Element& b) const {
    return add(a, negate(b));
}

Element AbelianStructure::evaluate(const Word& w) const {
    Element r = zero();
    for (int letter : w) r = step(r, letter);
    return r;
}

bool AbelianStructure::is_zero(const Element& e) const {
    for (long long v : e)
        if (v != 0) return false;
    return true;
}

int geodesic_length(const AbelianStructure& g, const Element& e, std::size_t max_elements) {
    if (g.is_zero(e)) return 0;
    if (max_elements == 0) max_elements = BallTable::default_cap();
    int radius = 2;
    while (true) {
        BallTable ball(g, radius, max_elements);
        std::uint32_t idx = ball.find(e);
        if (idx != BallTable::npos) return ball.distance(idx);
        if (ball.exhausted()) fail(errc::internal, "element outside the enumerated group");
        radius *= 2;
    }
}

} // namespace abgrow
