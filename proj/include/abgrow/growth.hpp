#ifndef ABGROW_GROWTH_HPP
#define ABGROW_GROWTH_HPP

#include "abgrow/ratfun.hpp"
#include "abgrow/subgraph.hpp"

namespace abgrow {

struct GrowthParams {
    int gamma = 0;                // 0: diameter * kappa + effective relation length + 1
    int window = 0;               // 0: default per method
    int max_n = 0;                // fit: largest expansion length tried
    std::size_t max_elements = 0; // ball element cap override
};

// Exact morphism radius counts c_0..c_n: a placement of the subgraph is
// determined by the image g of the base vertex, its radius is
// max over vertices v of |g + (v - base)|, and c_j counts radius-j
// placements.
std::vector<mpz_class> morphism_counts(const AbelianStructure& g, const Subgraph& s, int n,
                                       std::size_t max_elements = 0);

// The same counts split by the final acceptor state of the base image's
// normal form; table[j][state].  Verification scale.
std::vector<std::vector<unsigned long long>>
morphism_counts_by_state(const AbelianStructure& g, const Subgraph& s, const Acceptor& acc,
                         int n, std::size_t max_elements = 0);

// Independent recount of ball totals b_0..b_n: place the base anywhere,
// propagate images along subgraph edges step by step, re-check every edge,
// and keep placements whose vertices all stay in the ball.
std::vector<mpz_class> backtrack_ball_counts(const AbelianStructure& g, const Subgraph& s,
                                             int n, std::size_t max_elements = 0);

struct ExactGrowth {
    RationalGF series;
    int gamma = 0;
    int kappa = 0;
    int diameter = 0;
    int window = 0;
    long head_length = 0;   // coefficients 0..head_length taken verbatim from counting
    std::vector<int> delta; // per accept state; -1 for states without a loop on their path
};

// Assemble C(S,z) from exact counts up to the head length plus per-state
// geometric tails, verifying the per-state tail law on a window and the
// language size against the ball at every length.  Any disagreement fails
// verification rather than producing output.
ExactGrowth growth_exact(const GroupSpec& spec, const Subgraph& s, const GrowthParams& p = {});

struct FitGrowth {
    bool conclusive = false;
    RationalGF series;       // meaningful when conclusive
    int matched_through = 0; // coefficients 0..matched_through reproduced exactly
    int window = 0;
};

// Fit numerator/(1-z)^rank to exact counts: grow the expansion until the
// rank-th backward difference vanishes on a trailing window, then verify
// the reconstruction reproduces every computed coefficient and that the
// range extends to three times the numerator onset.  Never guesses:
// inconclusive when the cap is reached first.
FitGrowth growth_fit(const GroupSpec& spec, const Subgraph& s, const GrowthParams& p = {});

} // namespace abgrow

#endif
