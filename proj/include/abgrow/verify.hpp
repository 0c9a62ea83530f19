#ifndef ABGROW_VERIFY_HPP
#define ABGROW_VERIFY_HPP

#include "abgrow/growth.hpp"

#include <string>
#include <vector>

namespace abgrow {

// Cross-method report for one subgraph: the assembled series, the fitted
// series, and raw counts must agree coefficient by coefficient, with the
// canonical denominator power equal to the group rank and the numerator
// positive at 1.
struct GrowthReport {
    bool ok = false;
    int rank = 0;
    std::vector<long long> torsion;
    long mu = 0;
    int kappa = 0;
    int gamma = 0;
    int diameter = 0;
    std::string subgraph_name;
    bool exact_ran = false;
    ExactGrowth exact;
    FitGrowth fit;
    std::vector<mpz_class> reference; // raw counts, independent of both methods
    int agreement_through = -1;
    std::vector<std::string> failures;
};

GrowthReport verify_main_theorem(const GroupSpec& spec, const Subgraph& s,
                                 const GrowthParams& p = {});

// Exhaustively compare acceptor acceptance with canonical (shortlex-least)
// status for every word up to max_len; returns the number of words
// examined and describes the first disagreement, if any, in mismatch.
long long language_agreement(const AbelianStructure& g, const Acceptor& acc, int max_len,
                             std::string& mismatch);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    bool ok = true;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail) {
        ok = ok && pass;
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

// Full invariant suite for one group: exhaustive language agreement up to
// max_word_len, sphere partition through max_sphere_len, per-state series
// against walk counts, and cross-method growth for a vertex and an edge.
SuiteReport verify_group_suite(const GroupSpec& spec, int max_word_len, int max_sphere_len,
                               const GrowthParams& p = {});

} // namespace abgrow

#endif
