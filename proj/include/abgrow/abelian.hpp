#ifndef ABGROW_ABELIAN_HPP
#define ABGROW_ABELIAN_HPP

#include "abgrow/alphabet.hpp"
#include "abgrow/smith.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace abgrow {

// Canonical coordinates for a group element: first the free coordinates
// (rank of them, unbounded), then one coordinate per torsion modulus,
// reduced into [0, d).
using Element = std::vector<long long>;

struct ElementHash {
    std::size_t operator()(const Element& e) const;
};

// A finitely generated abelian group together with the images of the
// alphabet letters in canonical coordinates.  Derived from a presentation
// by Smith-reducing the relator matrix over the inverse-pair basis.
class AbelianStructure {
public:
    static AbelianStructure derive(const GroupSpec& spec);

    const OrderedAlphabet& alphabet() const { return alphabet_; }
    int rank() const { return rank_; }
    const std::vector<long long>& torsion() const { return moduli_; }
    int width() const { return rank_ + static_cast<int>(moduli_.size()); }
    bool finite() const { return rank_ == 0; }
    const mpz_class& order() const { return order_; } // 0 when infinite

    int pair_of(int letter) const { return pair_of_[letter]; }
    int sign_of(int letter) const { return sign_of_[letter]; }
    int num_pairs() const { return num_pairs_; }

    Element zero() const { return Element(width(), 0); }
    const Element& image(int letter) const { return images_[letter]; }
    Element step(const Element& e, int letter) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element negate(const Element& e) const;
    Element evaluate(const Word& w) const;
    bool is_zero(const Element& e) const;

private:
    OrderedAlphabet alphabet_{{"?"}, {{"?", "?"}}};
    int num_pairs_ = 0;
    int rank_ = 0;
    std::vector<int> pair_of_, sign_of_;
    std::vector<long long> moduli_;  // invariant factors >= 2, in divisibility order
    std::vector<Element> images_;    // per letter, canonical coordinates
    mpz_class order_;

    AbelianStructure() = default;
};

// Geodesic length of an element with respect to the alphabet, by growing
// balls around the identity.  Fails with a resource error at the cap.
int geodesic_length(const AbelianStructure& g, const Element& e,
                    std::size_t max_elements = 0);

} // namespace abgrow

#endif
