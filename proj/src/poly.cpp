#include "abgrow/poly.hpp"
#include "abgrow/errors.hpp"

#include <sstream>

namespace abgrow {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& coeff, int power) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(power + 1, 0);
        p.c_[power] = coeff;
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

mpz_class IntPoly::eval_one() const {
    mpz_class s = 0;
    for (const mpz_class& c : c_) s += c;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (mpz_class& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::times_one_minus_z() const {
    if (is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r.c_[i] += c_[i];
        r.c_[i + 1] -= c_[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::exact_div_one_minus_z() const {
    if (is_zero()) return {};
    // P = Q * (1 - z) means q_i = p_i + q_{i-1}; the final prefix sum is
    // the remainder and must vanish
    IntPoly q;
    q.c_.assign(c_.size() - 1, 0);
    mpz_class run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        run += c_[i];
        q.c_[i] = run;
    }
    if (run + c_.back() != 0) fail(errc::internal, "polynomial not divisible by 1 - z");
    q.trim();
    return q;
}

namespace {

std::string format_poly(const IntPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        mpz_class c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = abs(c);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i >= 1) out << "z";
        if (i >= 2) {
            if (latex)
                out << "^{" << i << "}";
            else
                out << "^" << i;
        }
    }
    return out.str();
}

} // namespace

std::string IntPoly::str() const { return format_poly(*this, false); }
std::string IntPoly::latex() const { return format_poly(*this, true); }

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<mpz_class> accumulate_series(const std::vector<mpz_class>& c) {
    std::vector<mpz_class> b(c.size());
    mpz_class run = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        run += c[i];
        b[i] = run;
    }
    return b;
}

std::vector<mpz_class> difference_series(const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = i == 0 ? b[0] : b[i] - b[i - 1];
    return c;
}

} // namespace abgrow
