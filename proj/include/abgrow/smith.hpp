#pragma once

#include <gmpxx.h>
#include <vector>

namespace abgrow {

// Row-major rectangular integer matrix.
using Mat = std::vector<std::vector<mpz_class>>;

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(Mat a);

// u * input * v == d, with u and v unimodular and d diagonal, entries
// nonnegative, each dividing the next (zeros last).
struct SmithResult {
    Mat d;
    Mat u;
    Mat v;
};

// cols must be supplied when the matrix has no rows.
SmithResult smith_normal_form(const Mat& input, int cols = -1);

} // namespace abgrow
