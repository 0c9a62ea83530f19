#ifndef ABGROW_POLY_HPP
#define ABGROW_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace abgrow {

// Integer polynomial with exact coefficients, stored in ascending powers.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly monomial(const mpz_class& coeff, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    mpz_class coeff(int i) const;
    bool is_zero() const { return c_.empty(); }
    mpz_class eval_one() const; // value at z = 1

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly times_one_minus_z() const;
    IntPoly exact_div_one_minus_z() const; // error unless divisible

    std::string str() const;
    std::string latex() const;

private:
    std::vector<mpz_class> c_;
    void trim();
};

mpz_class binomial(long n, long k);

// ball sizes from sphere sizes and back (prefix sums and differences)
std::vector<mpz_class> accumulate_series(const std::vector<mpz_class>& c);
std::vector<mpz_class> difference_series(const std::vector<mpz_class>& b);

} // namespace abgrow

#endif
