#ifndef ABGROW_RATFUN_HPP
#define ABGROW_RATFUN_HPP

#include "abgrow/acceptor.hpp"
#include "abgrow/poly.hpp"

namespace abgrow {

// Rational generating function num / (1 - z)^denom_pow, kept normalized:
// either denom_pow == 0 or num(1) != 0.
struct RationalGF {
    IntPoly num;
    int denom_pow = 0;

    static RationalGF make(IntPoly num, int denom_pow);

    RationalGF operator+(const RationalGF& o) const;
    RationalGF operator-(const RationalGF& o) const;
    RationalGF operator*(const RationalGF& o) const;
    bool operator==(const RationalGF& o) const {
        return denom_pow == o.denom_pow && num == o.num;
    }

    std::vector<mpz_class> expand(int n) const; // series coefficients 0..n
    std::string str() const;
    std::string latex() const;
};

// words of each length accepted at one state: z^depth / (1 - z)^pumps
RationalGF state_growth(int depth, int pumps);

// the state's growth series with the first head_len coefficients removed,
// then shifted up by the given offset
RationalGF tail_series(int head_len, int shift, int depth, int pumps);

// sum of state growths over all acceptor states: the sphere-size series
RationalGF language_growth(const Acceptor& acc);

// partial-sum transform: B = C / (1 - z), so ball counts from sphere counts
RationalGF ball_series(const RationalGF& c);
// difference transform: C = (1 - z) B, inverse of ball_series
RationalGF sphere_series(const RationalGF& b);

} // namespace abgrow

#endif
