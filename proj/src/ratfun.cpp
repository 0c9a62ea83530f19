#include "abgrow/ratfun.hpp"
#include "abgrow/errors.hpp"

#include <map>
#include <sstream>

namespace abgrow {

RationalGF RationalGF::make(IntPoly num, int denom_pow) {
    if (denom_pow < 0) fail(errc::internal, "negative denominator power");
    if (num.is_zero()) return RationalGF{{}, 0};
    while (denom_pow > 0 && num.eval_one() == 0) {
        num = num.exact_div_one_minus_z();
        --denom_pow;
    }
    return RationalGF{std::move(num), denom_pow};
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    int p = std::max(denom_pow, o.denom_pow);
    IntPoly a = num, b = o.num;
    for (int i = denom_pow; i < p; ++i) a = a.times_one_minus_z();
    for (int i = o.denom_pow; i < p; ++i) b = b.times_one_minus_z();
    return make(a + b, p);
}

RationalGF RationalGF::operator-(const RationalGF& o) const {
    return *this + RationalGF{-o.num, o.denom_pow};
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return make(num * o.num, denom_pow + o.denom_pow);
}

std::vector<mpz_class> RationalGF::expand(int n) const {
    std::vector<mpz_class> out(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        // coefficient of z^j in num / (1-z)^p
        mpz_class c = 0;
        for (int i = 0; i <= std::min(j, num.degree()); ++i) {
            if (denom_pow == 0) {
                if (i == j) c += num.coeff(i);
            } else {
                c += num.coeff(i) * binomial(j - i + denom_pow - 1, denom_pow - 1);
            }
        }
        out[j] = c;
    }
    return out;
}

namespace {

std::string format_gf(const RationalGF& f, bool latex) {
    std::string n = latex ? f.num.latex() : f.num.str();
    if (f.denom_pow == 0) return n;
    std::ostringstream out;
    if (latex) {
        out << "\\frac{" << n << "}{(1 - z)";
        if (f.denom_pow > 1) out << "^{" << f.denom_pow << "}";
        out << "}";
    } else {
        out << "(" << n << ") / (1 - z)";
        if (f.denom_pow > 1) out << "^" << f.denom_pow;
    }
    return out.str();
}

} // namespace

std::string RationalGF::str() const { return format_gf(*this, false); }
std::string RationalGF::latex() const { return format_gf(*this, true); }

RationalGF state_growth(int depth, int pumps) {
    return RationalGF::make(IntPoly::monomial(1, depth), pumps);
}

RationalGF tail_series(int head_len, int shift, int depth, int pumps) {
    if (head_len < 1) fail(errc::internal, "tail must remove a nonempty head");
    if (shift < 0) fail(errc::internal, "negative tail shift");
    RationalGF g = state_growth(depth, pumps);
    std::vector<mpz_class> head = g.expand(head_len - 1);
    IntPoly head_poly(std::move(head));
    RationalGF tail = g - RationalGF::make(std::move(head_poly), 0);
    return RationalGF::make(IntPoly::monomial(1, shift), 0) * tail;
}

RationalGF language_growth(const Acceptor& acc) {
    std::map<std::pair<int, int>, long> groups;
    for (int s = 0; s < acc.size(); ++s)
        ++groups[{acc.state(s).depth, acc.state(s).pumps}];
    RationalGF total;
    for (const auto& [key, count] : groups) {
        auto [depth, pumps] = key;
        RationalGF scaled =
            RationalGF::make(IntPoly::monomial(count, depth), pumps);
        total = total + scaled;
    }
    return total;
}

RationalGF ball_series(const RationalGF& c) {
    return RationalGF::make(c.num, c.denom_pow + 1);
}

RationalGF sphere_series(const RationalGF& b) {
    if (b.denom_pow > 0) return RationalGF::make(b.num, b.denom_pow - 1);
    return RationalGF::make(b.num.times_one_minus_z(), 0);
}

} // namespace abgrow
