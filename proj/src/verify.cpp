#include "abgrow/verify.hpp"
#include "abgrow/ball.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>

namespace abgrow {

namespace {

std::string format_coeffs(const std::vector<mpz_class>& v, std::size_t limit = 8) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    if (v.size() > limit) out += ", ...";
    return out;
}

} // namespace

GrowthReport verify_main_theorem(const GroupSpec& spec, const Subgraph& s,
                                 const GrowthParams& p) {
    GrowthReport r;
    AbelianStructure g = AbelianStructure::derive(spec);
    validate_subgraph(g, s);
    r.rank = g.rank();
    r.torsion = g.torsion();
    r.mu = mu(spec);
    r.subgraph_name = s.name;
    r.diameter = subgraph_diameter(g, s);

    try {
        r.exact = growth_exact(spec, s, p);
        r.exact_ran = true;
        r.kappa = r.exact.kappa;
        r.gamma = r.exact.gamma;
    } catch (const Error& e) {
        r.failures.push_back(std::string("exact assembly failed: ") + e.what());
    }

    try {
        r.fit = growth_fit(spec, s, p);
        if (!r.fit.conclusive)
            r.failures.push_back("fit did not stabilize within the expansion cap");
    } catch (const Error& e) {
        r.failures.push_back(std::string("fit failed: ") + e.what());
    }

    int n_ref = r.fit.conclusive ? r.fit.matched_through : 16;
    try {
        r.reference = morphism_counts(g, s, n_ref, p.max_elements);
    } catch (const Error& e) {
        r.failures.push_back(std::string("reference counting failed: ") + e.what());
    }

    if (!r.reference.empty()) {
        if (r.exact_ran) {
            auto expanded = r.exact.series.expand(n_ref);
            for (int j = 0; j <= n_ref; ++j)
                if (expanded[j] != r.reference[j]) {
                    r.failures.push_back("assembled series first differs from counts at z^" +
                                         std::to_string(j) + " (" + expanded[j].get_str() +
                                         " vs " + r.reference[j].get_str() + ")");
                    break;
                }
        }
        if (r.fit.conclusive) {
            auto expanded = r.fit.series.expand(n_ref);
            for (int j = 0; j <= n_ref; ++j)
                if (expanded[j] != r.reference[j]) {
                    r.failures.push_back("fitted series first differs from counts at z^" +
                                         std::to_string(j) + " (" + expanded[j].get_str() +
                                         " vs " + r.reference[j].get_str() + ")");
                    break;
                }
        }
    }

    if (r.exact_ran && r.fit.conclusive && !(r.exact.series == r.fit.series))
        r.failures.push_back("assembled and fitted closed forms differ: " +
                             r.exact.series.str() + " vs " + r.fit.series.str());

    for (const auto& [label, series, present] :
         {std::tuple<const char*, const RationalGF*, bool>{"assembled", &r.exact.series,
                                                           r.exact_ran},
          std::tuple<const char*, const RationalGF*, bool>{"fitted", &r.fit.series,
                                                           r.fit.conclusive}}) {
        if (!present) continue;
        if (series->denom_pow != r.rank)
            r.failures.push_back(std::string(label) + " denominator power " +
                                 std::to_string(series->denom_pow) +
                                 " does not equal the rank " + std::to_string(r.rank));
        if (sgn(series->num.eval_one()) <= 0)
            r.failures.push_back(std::string(label) + " numerator is not positive at z = 1");
    }

    if (r.failures.empty()) r.agreement_through = n_ref;
    r.ok = r.failures.empty();
    return r;
}

long long language_agreement(const AbelianStructure& g, const Acceptor& acc, int max_len,
                             std::string& mismatch) {
    mismatch.clear();
    BallTable ball(g, max_len);
    int k = g.alphabet().size();
    long long checked = 1; // the empty word: canonical and accepted by construction
    Word word;

    // depth-first over all words; a word is canonical exactly when its
    // prefix is and the ball discovered its element from that prefix
    auto rec = [&](auto&& self, const Element& e, int state, std::uint32_t bidx,
                   bool canonical, int depth) -> bool {
        if (depth == max_len) return true;
        for (int x = 0; x < k; ++x) {
            Element e2 = g.step(e, x);
            std::uint32_t b2 = ball.find(e2);
            if (b2 == BallTable::npos)
                fail(errc::internal, "word evaluation left the enumerated ball");
            int s2 = state == acc.failure() ? acc.failure() : acc.step(state, x);
            bool canon2 = canonical && ball.distance(b2) == depth + 1 &&
                          ball.pred(b2) == bidx && ball.last_letter(b2) == x;
            ++checked;
            word.push_back(x);
            if ((s2 != acc.failure()) != canon2) {
                mismatch = "word \"" + g.alphabet().format_word(word) + "\" is " +
                           (canon2 ? "canonical but rejected" : "not canonical but accepted");
                return false;
            }
            if (!self(self, e2, s2, b2, canon2, depth + 1)) return false;
            word.pop_back();
        }
        return true;
    };
    rec(rec, g.zero(), acc.start(), 0, true, 0);
    return checked;
}

SuiteReport verify_group_suite(const GroupSpec& spec, int max_word_len, int max_sphere_len,
                               const GrowthParams& p) {
    SuiteReport report;
    AbelianStructure g = AbelianStructure::derive(spec);
    long bound = mu_effective(spec) + 1;
    std::vector<MinimalRelation> rels = minimal_relations(g, static_cast<int>(bound));
    long gamma = p.gamma > 0 ? p.gamma : mu_effective(spec) + 1;
    Acceptor acc = Acceptor::build(g, rels, static_cast<int>(gamma));

    {
        std::string mismatch;
        long long checked = language_agreement(g, acc, max_word_len, mismatch);
        report.add("language agreement",
                   mismatch.empty(),
                   mismatch.empty()
                       ? std::to_string(checked) + " words through length " +
                             std::to_string(max_word_len) + " agree"
                       : mismatch);
    }

    {
        BallTable ball(g, max_sphere_len);
        auto spheres = ball.sphere_counts();
        TransitionMatrix moves = transition_counts(acc);
        WalkCounter wc(moves);
        bool ok = true;
        std::string detail;
        int state_check_len = std::min(40, max_sphere_len);
        std::vector<std::vector<unsigned long long>> per_length{wc.counts()};
        for (int len = 0; len <= max_sphere_len && ok; ++len) {
            if (len > 0) {
                wc.advance();
                if (len <= state_check_len) per_length.push_back(wc.counts());
            }
            unsigned long long total = 0;
            for (unsigned long long c : wc.counts()) total += c;
            unsigned long long sphere =
                len < static_cast<int>(spheres.size()) ? spheres[len] : 0;
            if (total != sphere) {
                ok = false;
                detail = "acceptor counts " + std::to_string(total) + " words at length " +
                         std::to_string(len) + " but the sphere has " +
                         std::to_string(sphere) + " elements";
            }
        }
        if (ok)
            detail = "accepted-word counts match sphere sizes through length " +
                     std::to_string(max_sphere_len);
        report.add("sphere partition", ok, detail);

        bool series_ok = true;
        std::string series_detail;
        for (int st = 0; st < acc.size() && series_ok; ++st) {
            RationalGF gf = state_growth(acc.state(st).depth, acc.state(st).pumps);
            auto coeffs = gf.expand(state_check_len);
            for (int len = 0; len <= state_check_len && series_ok; ++len)
                if (coeffs[len] != mpz_class(static_cast<unsigned long>(
                                       per_length[len][st]))) {
                    series_ok = false;
                    series_detail = "state " + std::to_string(st) +
                                    " series disagrees with walk counts at length " +
                                    std::to_string(len);
                }
        }
        if (series_ok)
            series_detail = "all " + std::to_string(acc.size()) +
                            " state series match walk counts through length " +
                            std::to_string(state_check_len);
        report.add("state series", series_ok, series_detail);
    }

    {
        Subgraph vertex = single_vertex(g);
        GrowthReport r = verify_main_theorem(spec, vertex, p);
        report.add("vertex growth", r.ok,
                   r.ok ? r.exact.series.str() + ", coefficients " +
                              format_coeffs(r.reference)
                        : r.failures.front());
    }

    {
        Subgraph edge = subgraph_from_path(g, Word{0});
        GrowthReport r = verify_main_theorem(spec, edge, p);
        report.add("edge growth", r.ok,
                   r.ok ? r.exact.series.str() + ", coefficients " +
                              format_coeffs(r.reference)
                        : r.failures.front());
    }

    return report;
}

} // namespace abgrow
