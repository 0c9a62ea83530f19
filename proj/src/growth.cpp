#include "abgrow/growth.hpp"
#include "abgrow/ball.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace abgrow {

namespace {

int checked_radius(long long r) {
    if (r < 0 || r > 60000) fail(errc::resource, "required ball radius is out of range");
    return static_cast<int>(r);
}

// largest geodesic length among the vertex offsets; at most the diameter
int base_spread(const AbelianStructure& g, const std::vector<Element>& offsets) {
    int m = 0;
    for (const Element& off : offsets) m = std::max(m, geodesic_length(g, off));
    return m;
}

// max distance over the placement g + offsets; every lookup must land in the ball
int placement_radius(const BallTable& ball, const AbelianStructure& g, const Element& e,
                     const std::vector<Element>& offsets) {
    int m = 0;
    for (const Element& off : offsets) {
        std::uint32_t idx = ball.find(g.add(e, off));
        if (idx == BallTable::npos) fail(errc::internal, "placement left the enumerated ball");
        m = std::max(m, ball.distance(idx));
    }
    return m;
}

// first index past the elements of geodesic length <= n
std::uint32_t scan_limit(const BallTable& ball, long long n) {
    int top = static_cast<int>(std::min<long long>(n, ball.radius()));
    return ball.level_end(top);
}

// final acceptor state of every normal form among the first `end` elements
std::vector<int> final_states(const BallTable& ball, const Acceptor& acc, std::uint32_t end) {
    std::vector<int> fs(end);
    if (end > 0) fs[0] = acc.start();
    for (std::uint32_t idx = 1; idx < end; ++idx) {
        int st = acc.step(fs[ball.pred(idx)], ball.last_letter(idx));
        if (st == acc.failure())
            fail(errc::internal, "a ball normal form was rejected by the acceptor");
        fs[idx] = st;
    }
    return fs;
}

} // namespace

std::vector<mpz_class> morphism_counts(const AbelianStructure& g, const Subgraph& s, int n,
                                       std::size_t max_elements) {
    validate_subgraph(g, s);
    std::vector<Element> off = vertex_offsets(g, s);
    BallTable ball(g, checked_radius(static_cast<long long>(n) + base_spread(g, off)),
                   max_elements);
    std::vector<mpz_class> counts(n + 1);
    std::uint32_t end = scan_limit(ball, n);
    for (std::uint32_t idx = 0; idx < end; ++idx) {
        int m = placement_radius(ball, g, ball.element(idx), off);
        if (m <= n) counts[m] += 1;
    }
    return counts;
}

std::vector<std::vector<unsigned long long>>
morphism_counts_by_state(const AbelianStructure& g, const Subgraph& s, const Acceptor& acc,
                         int n, std::size_t max_elements) {
    validate_subgraph(g, s);
    std::vector<Element> off = vertex_offsets(g, s);
    BallTable ball(g, checked_radius(static_cast<long long>(n) + base_spread(g, off)),
                   max_elements);
    std::uint32_t end = scan_limit(ball, n);
    std::vector<int> fs = final_states(ball, acc, end);
    std::vector<std::vector<unsigned long long>> table(
        n + 1, std::vector<unsigned long long>(acc.size(), 0));
    for (std::uint32_t idx = 0; idx < end; ++idx) {
        int m = placement_radius(ball, g, ball.element(idx), off);
        if (m <= n) ++table[m][fs[idx]];
    }
    return table;
}

std::vector<mpz_class> backtrack_ball_counts(const AbelianStructure& g, const Subgraph& s,
                                             int n, std::size_t max_elements) {
    validate_subgraph(g, s);
    int nv = static_cast<int>(s.vertices.size());

    // spanning order: each vertex after the base is determined by one edge
    struct Step {
        int vertex;
        int from;
        int letter;
        bool forward; // tail -> head when true
    };
    std::vector<Step> order;
    std::vector<char> placed(nv, 0);
    placed[s.base] = 1;
    std::vector<std::vector<std::pair<int, int>>> incident(nv); // (edge, +1 fwd / -1 rev)
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        incident[s.edges[i].tail].push_back({static_cast<int>(i), +1});
        incident[s.edges[i].head].push_back({static_cast<int>(i), -1});
    }
    std::vector<int> frontier{s.base};
    for (std::size_t at = 0; at < frontier.size(); ++at) {
        int v = frontier[at];
        for (auto [ei, dir] : incident[v]) {
            const LabelledEdge& e = s.edges[ei];
            int u = dir > 0 ? e.head : e.tail;
            if (placed[u]) continue;
            placed[u] = 1;
            order.push_back({u, v, e.letter, dir > 0});
            frontier.push_back(u);
        }
    }

    BallTable ball(g, n, max_elements);
    std::vector<mpz_class> balls(n + 1);
    std::vector<Element> img(nv, g.zero());
    std::uint32_t end = scan_limit(ball, n);
    for (std::uint32_t idx = 0; idx < end; ++idx) {
        img[s.base] = ball.element(idx);
        int radius = ball.distance(idx);
        bool inside = true;
        for (const Step& st : order) {
            const Element& from = img[st.from];
            img[st.vertex] = st.forward ? g.step(from, st.letter)
                                        : g.sub(from, g.image(st.letter));
            std::uint32_t vi = ball.find(img[st.vertex]);
            if (vi == BallTable::npos) {
                inside = false;
                break;
            }
            radius = std::max(radius, ball.distance(vi));
        }
        if (!inside) continue;
        for (const LabelledEdge& e : s.edges)
            if (g.step(img[e.tail], e.letter) != img[e.head])
                fail(errc::internal, "edge propagation produced an inconsistent placement");
        ++balls[radius];
    }
    for (int j = 1; j <= n; ++j) balls[j] += balls[j - 1];
    return balls;
}

ExactGrowth growth_exact(const GroupSpec& spec, const Subgraph& s, const GrowthParams& p) {
    AbelianStructure g = AbelianStructure::derive(spec);
    validate_subgraph(g, s);
    std::vector<Element> off = vertex_offsets(g, s);

    long bound = mu_effective(spec) + 1;
    std::vector<MinimalRelation> rels = minimal_relations(g, static_cast<int>(bound));
    int kappa = fellow_traveller_constant(rels);
    int d = subgraph_diameter(g, s);

    long gamma_required = static_cast<long>(d) * kappa + mu_effective(spec) + 1;
    long gamma = p.gamma > 0 ? p.gamma : gamma_required;
    if (gamma < gamma_required)
        fail(errc::validation,
             "gamma " + std::to_string(gamma) + " is below the tail-law threshold " +
                 std::to_string(gamma_required) +
                 " (diameter * fellow-traveller bound + relation length + 1)");

    Acceptor acc = Acceptor::build(g, rels, static_cast<int>(gamma));

    int k = g.alphabet().size();
    long n0 = gamma * k + d;
    int window = p.window > 0 ? p.window : 2;
    int max_pumps = 0;
    for (int i = 0; i < acc.size(); ++i) max_pumps = std::max(max_pumps, acc.state(i).pumps);

    BallTable ball(g, checked_radius(n0 + d + std::max(window, max_pumps)), p.max_elements);

    // exact counts: totals through n0, per-state on the verification window
    std::uint32_t end = scan_limit(ball, n0 + window);
    std::vector<int> fs = final_states(ball, acc, end);
    std::vector<unsigned long long> head(n0 + 1, 0);
    std::vector<unsigned long long> window_counts(
        static_cast<std::size_t>(acc.size()) * window, 0);
    for (std::uint32_t idx = 0; idx < end; ++idx) {
        int m = placement_radius(ball, g, ball.element(idx), off);
        if (m <= n0)
            ++head[m];
        else if (m <= n0 + window)
            ++window_counts[static_cast<std::size_t>(fs[idx]) * window + (m - n0 - 1)];
    }

    // accepted-word counts per length; totals must match sphere sizes at
    // every length, or the relation exponent bound was too small
    auto spheres = ball.sphere_counts();
    long snap_lo = std::max(0L, n0 - d);
    std::vector<std::vector<unsigned long long>> snapshots;
    TransitionMatrix moves = transition_counts(acc);
    WalkCounter wc(moves);
    for (long len = 0; len <= n0 + window; ++len) {
        if (len > 0) wc.advance();
        unsigned long long total = 0;
        for (unsigned long long c : wc.counts()) total += c;
        unsigned long long sphere =
            len < static_cast<long>(spheres.size()) ? spheres[len] : 0;
        if (total != sphere)
            fail(errc::verify, "accepted-word count " + std::to_string(total) +
                                   " differs from the sphere size " + std::to_string(sphere) +
                                   " at length " + std::to_string(len) +
                                   "; raise the relation exponent bound");
        if (len >= snap_lo) snapshots.push_back(wc.counts());
    }

    // per-state radius offset via a pumped witness, checked on the window
    std::vector<int> delta(acc.size(), -1);
    for (int st = 0; st < acc.size(); ++st) {
        const AcceptorState& state = acc.state(st);
        if (state.pumps == 0) {
            for (int j = 0; j < window; ++j)
                if (window_counts[static_cast<std::size_t>(st) * window + j] != 0)
                    fail(errc::verify,
                         "a state without loops produced morphisms past the head");
            continue;
        }

        std::vector<int> path;
        for (int at = st; at != -1; at = acc.state(at).pred) path.push_back(at);
        std::reverse(path.begin(), path.end());

        long t = (n0 + 1 - state.depth + state.pumps - 1) / state.pumps;
        if (t < 1) fail(errc::internal, "pumped witness needs no pumping");
        Element e = g.zero();
        long len = 0;
        for (int at : path) {
            const AcceptorState& ps = acc.state(at);
            if (ps.in_letter < 0) continue;
            e = g.step(e, ps.in_letter);
            ++len;
            if (ps.loop)
                for (long rep = 0; rep < t; ++rep) {
                    e = g.step(e, ps.in_letter);
                    ++len;
                }
        }
        if (len != state.depth + t * state.pumps || len <= n0 || len > n0 + state.pumps)
            fail(errc::internal, "pumped witness has the wrong length");
        std::uint32_t widx = ball.find(e);
        if (widx == BallTable::npos || ball.distance(widx) != len)
            fail(errc::internal, "pumped witness word is not geodesic");

        int dlt = placement_radius(ball, g, e, off) - static_cast<int>(len);
        if (dlt < 0 || dlt > d)
            fail(errc::verify, "witness radius offset " + std::to_string(dlt) +
                                   " falls outside [0, diameter]");
        delta[st] = dlt;

        for (int j = 1; j <= window; ++j) {
            unsigned long long got =
                window_counts[static_cast<std::size_t>(st) * window + (j - 1)];
            unsigned long long want = snapshots[n0 + j - dlt - snap_lo][st];
            if (got != want)
                fail(errc::verify,
                     "morphism count " + std::to_string(got) + " at radius " +
                         std::to_string(n0 + j) + " disagrees with the walk count " +
                         std::to_string(want) + " for state " + std::to_string(st));
        }
    }

    // head polynomial plus per-state tails, grouped by shared shape
    std::vector<mpz_class> head_coeffs;
    head_coeffs.reserve(head.size());
    for (unsigned long long c : head) head_coeffs.emplace_back(static_cast<unsigned long>(c));
    RationalGF series = RationalGF::make(IntPoly(std::move(head_coeffs)), 0);

    std::map<std::tuple<int, int, int>, unsigned long> groups;
    for (int st = 0; st < acc.size(); ++st)
        if (delta[st] >= 0)
            ++groups[{acc.state(st).depth, acc.state(st).pumps, delta[st]}];
    for (const auto& [key, count] : groups) {
        auto [depth, pumps, dlt] = key;
        RationalGF tail = tail_series(static_cast<int>(n0) + 1 - dlt, dlt, depth, pumps);
        series = series + RationalGF::make(
                              tail.num * IntPoly::monomial(mpz_class(count), 0),
                              tail.denom_pow);
    }

    if (series.denom_pow != g.rank())
        fail(errc::verify, "denominator power " + std::to_string(series.denom_pow) +
                               " does not match the group rank " + std::to_string(g.rank()));
    if (g.rank() > 0 && sgn(series.num.eval_one()) <= 0)
        fail(errc::verify, "numerator does not stay positive at z = 1");

    ExactGrowth out;
    out.series = std::move(series);
    out.gamma = static_cast<int>(gamma);
    out.kappa = kappa;
    out.diameter = d;
    out.window = window;
    out.head_length = n0;
    out.delta = std::move(delta);
    return out;
}

FitGrowth growth_fit(const GroupSpec& spec, const Subgraph& s, const GrowthParams& p) {
    AbelianStructure g = AbelianStructure::derive(spec);
    validate_subgraph(g, s);
    int r = g.rank();
    int window = p.window > 0 ? p.window : 2 * r + 4;
    int spread = base_spread(g, vertex_offsets(g, s));
    long hi = p.max_n > 0 ? p.max_n : 120;

    FitGrowth out;
    out.window = window;
    long n = std::min<long>(hi, std::max({2L * window + 4, 16L, spread + window + 2L}));
    while (true) {
        std::vector<mpz_class> counts;
        try {
            counts = morphism_counts(g, s, static_cast<int>(n), p.max_elements);
        } catch (const Error& e) {
            if (e.kind() == errc::resource) {
                out.matched_through = static_cast<int>(n);
                return out; // inconclusive: the ball outgrew the cap first
            }
            throw;
        }

        // q = (1-z)^r * counts as a series, truncated at degree n
        std::vector<mpz_class> q = counts;
        for (int pass = 0; pass < r; ++pass)
            for (long j = n; j >= 1; --j) q[j] -= q[j - 1];

        bool stable = n >= spread + window;
        for (long j = n - window + 1; stable && j <= n; ++j) stable = sgn(q[j]) == 0;

        if (stable) {
            IntPoly numerator(std::vector<mpz_class>(q.begin(), q.begin() + (n - window + 1)));
            long onset = numerator.degree() + 1;
            if (n >= 3 * onset) {
                RationalGF candidate = RationalGF::make(numerator, r);
                std::vector<mpz_class> expanded = candidate.expand(static_cast<int>(n));
                if (std::equal(expanded.begin(), expanded.end(), counts.begin())) {
                    out.conclusive = true;
                    out.series = std::move(candidate);
                    out.matched_through = static_cast<int>(n);
                    return out;
                }
            } else if (3 * onset <= hi) {
                n = 3 * onset;
                continue;
            }
        }

        if (n >= hi) {
            out.matched_through = static_cast<int>(n);
            return out; // inconclusive
        }
        n = std::min(hi, n + n / 2 + 4);
    }
}

} // namespace abgrow
