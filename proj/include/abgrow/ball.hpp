#ifndef ABGROW_BALL_HPP
#define ABGROW_BALL_HPP

#include "abgrow/abelian.hpp"

#include <cstdint>
#include <vector>

namespace abgrow {

// Breadth-first enumeration of the ball of a given radius around the
// identity.  Elements are stored in discovery order, which is shortlex
// order of their normal forms: within each sphere, predecessors are
// scanned in storage order and letters in alphabet order, so the first
// word reaching an element is its shortlex normal form.
class BallTable {
public:
    static constexpr std::uint32_t npos = 0xffffffffu;

    BallTable(const AbelianStructure& g, int radius, std::size_t max_elements = 0);

    const AbelianStructure& group() const { return *g_; }
    int radius() const { return radius_; }
    bool exhausted() const { return exhausted_; }
    std::size_t size() const { return dists_.size(); }

    std::uint32_t find(const Element& e) const;
    Element element(std::uint32_t idx) const;
    int distance(std::uint32_t idx) const { return dists_[idx]; }
    std::uint32_t pred(std::uint32_t idx) const { return preds_[idx]; }
    int last_letter(std::uint32_t idx) const { return letters_[idx]; }
    Word nf(std::uint32_t idx) const;

    std::uint32_t level_begin(int d) const { return level_start_[d]; }
    std::uint32_t level_end(int d) const { return level_start_[d + 1]; }
    std::vector<std::uint64_t> sphere_counts() const;

    // element cap: ABGROW_MAX_ELEMENTS in the environment, default 10^7
    static std::size_t default_cap();

private:
    const AbelianStructure* g_;
    int width_;
    int radius_ = 0;
    bool exhausted_ = false;
    std::vector<long long> arena_;
    std::vector<std::uint32_t> preds_;
    std::vector<std::int16_t> letters_;
    std::vector<std::uint16_t> dists_;
    std::vector<std::uint32_t> level_start_;
    std::vector<std::uint32_t> table_;
    std::size_t mask_ = 0;

    const long long* coords(std::uint32_t idx) const { return arena_.data() + std::size_t(idx) * width_; }
    std::uint64_t hash_span(const long long* p) const;
    std::uint32_t lookup(const long long* p) const;
    bool insert(const long long* p, int dist, std::uint32_t pred, int letter,
                std::size_t max_elements);
    void rehash(std::size_t buckets);
};

} // namespace abgrow

#endif
