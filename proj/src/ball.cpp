#include "abgrow/ball.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace abgrow {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::resource, "element coordinate overflow");
    return r;
}

} // namespace

std::size_t BallTable::default_cap() {
    if (const char* env = std::getenv("ABGROW_MAX_ELEMENTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

std::uint64_t BallTable::hash_span(const long long* p) const {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (int i = 0; i < width_; ++i) {
        std::uint64_t z = h + 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(p[i]);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h = z ^ (z >> 31);
    }
    return h;
}

std::uint32_t BallTable::lookup(const long long* p) const {
    std::size_t i = hash_span(p) & mask_;
    while (table_[i] != 0) {
        std::uint32_t idx = table_[i] - 1;
        if (std::memcmp(coords(idx), p, sizeof(long long) * width_) == 0) return idx;
        i = (i + 1) & mask_;
    }
    return npos;
}

void BallTable::rehash(std::size_t buckets) {
    table_.assign(buckets, 0);
    mask_ = buckets - 1;
    for (std::uint32_t idx = 0; idx < dists_.size(); ++idx) {
        std::size_t i = hash_span(coords(idx)) & mask_;
        while (table_[i] != 0) i = (i + 1) & mask_;
        table_[i] = idx + 1;
    }
}

bool BallTable::insert(const long long* p, int dist, std::uint32_t pred, int letter,
                       std::size_t max_elements) {
    if (lookup(p) != npos) return false;
    if (dists_.size() >= max_elements)
        fail(errc::resource, "ball exceeds the element cap; raise ABGROW_MAX_ELEMENTS");
    if ((dists_.size() + 1) * 10 > table_.size() * 7) rehash(table_.size() * 2);
    std::uint32_t idx = static_cast<std::uint32_t>(dists_.size());
    arena_.insert(arena_.end(), p, p + width_);
    preds_.push_back(pred);
    letters_.push_back(static_cast<std::int16_t>(letter));
    dists_.push_back(static_cast<std::uint16_t>(dist));
    std::size_t i = hash_span(p) & mask_;
    while (table_[i] != 0) i = (i + 1) & mask_;
    table_[i] = idx + 1;
    return true;
}

BallTable::BallTable(const AbelianStructure& g, int radius, std::size_t max_elements)
    : g_(&g), width_(g.width()) {
    if (radius < 0 || radius > 60000) fail(errc::validation, "ball radius out of range");
    if (max_elements == 0) max_elements = default_cap();
    table_.assign(1024, 0);
    mask_ = table_.size() - 1;

    Element origin = g.zero();
    insert(origin.data(), 0, npos, -1, max_elements);
    level_start_ = {0, 1};

    int k = g.alphabet().size();
    int rank = g.rank();
    const auto& moduli = g.torsion();
    std::vector<long long> scratch(width_);

    for (int d = 0; d < radius; ++d) {
        std::uint32_t lo = level_start_[d], hi = level_start_[d + 1];
        for (std::uint32_t idx = lo; idx < hi; ++idx) {
            for (int letter = 0; letter < k; ++letter) {
                const Element& img = g.image(letter);
                const long long* base = coords(idx);
                for (int i = 0; i < rank; ++i) scratch[i] = checked_add(base[i], img[i]);
                for (std::size_t t = 0; t < moduli.size(); ++t) {
                    std::size_t i = rank + t;
                    long long v = base[i] + img[i];
                    scratch[i] = v >= moduli[t] ? v - moduli[t] : v;
                }
                insert(scratch.data(), d + 1, idx, letter, max_elements);
            }
        }
        std::uint32_t level_end = static_cast<std::uint32_t>(dists_.size());
        if (level_end == hi) {
            exhausted_ = true;
            break;
        }
        level_start_.push_back(level_end);
        radius_ = d + 1;
    }
}

std::uint32_t BallTable::find(const Element& e) const {
    if (static_cast<int>(e.size()) != width_) fail(errc::internal, "element width mismatch");
    return lookup(e.data());
}

Element BallTable::element(std::uint32_t idx) const {
    const long long* p = coords(idx);
    return Element(p, p + width_);
}

Word BallTable::nf(std::uint32_t idx) const {
    Word w;
    while (idx != 0) {
        w.push_back(letters_[idx]);
        idx = preds_[idx];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<std::uint64_t> BallTable::sphere_counts() const {
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= radius_; ++d) out.push_back(level_end(d) - level_begin(d));
    return out;
}

} // namespace abgrow
