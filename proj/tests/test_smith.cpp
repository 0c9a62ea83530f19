#include "doctest.h"
#include "abgrow/smith.hpp"

#include <cstdint>
#include <vector>

using namespace abgrow;

namespace {

// deterministic 64-bit generator (splitmix64) so the property test is frozen
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

void check_certificate(const Mat& m, int cols) {
    SmithResult s = smith_normal_form(m, cols);
    int rows = static_cast<int>(m.size());
    REQUIRE(static_cast<int>(s.u.size()) == rows);
    REQUIRE(static_cast<int>(s.v.size()) == cols);

    mpz_class du = determinant(s.u);
    mpz_class dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    Mat umv = m.empty() ? Mat{} : mat_mul(mat_mul(s.u, m), s.v);
    if (m.empty()) umv = s.d; // 0 x n: nothing to compare
    REQUIRE(umv.size() == s.d.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) CHECK(umv[i][j] == s.d[i][j]);

    int r = std::min(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j) CHECK(s.d[i][j] == 0);
    for (int i = 0; i < r; ++i) CHECK(s.d[i][i] >= 0);
    for (int i = 0; i + 1 < r; ++i) {
        if (s.d[i][i] == 0) CHECK(s.d[i + 1][i + 1] == 0);
        else CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
    }
}

} // namespace

TEST_SUITE("smith") {

TEST_CASE("fixed small matrices") {
    // rows of the relation matrix of <a,b,c | ab=ba, c=ab>
    Mat m1 = {{0, 0, 0}, {1, 1, -1}};
    SmithResult s1 = smith_normal_form(m1);
    CHECK(s1.d[0][0] == 1);
    CHECK(s1.d[1][1] == 0);
    check_certificate(m1, 3);

    Mat m2 = {{2, -1, 0}, {0, 0, 0}};
    SmithResult s2 = smith_normal_form(m2);
    CHECK(s2.d[0][0] == 1);
    CHECK(s2.d[1][1] == 0);
    check_certificate(m2, 3);

    Mat m3 = {{2, 4}, {4, 2}};
    SmithResult s3 = smith_normal_form(m3);
    CHECK(s3.d[0][0] == 2);
    CHECK(s3.d[1][1] == 6);
    check_certificate(m3, 2);

    Mat m4 = {{5}};
    SmithResult s4 = smith_normal_form(m4);
    CHECK(s4.d[0][0] == 5);

    // divisibility chain needs an off-diagonal fix
    Mat m5 = {{2, 0}, {0, 3}};
    SmithResult s5 = smith_normal_form(m5);
    CHECK(s5.d[0][0] == 1);
    CHECK(s5.d[1][1] == 6);
    check_certificate(m5, 2);
}

TEST_CASE("no relators") {
    SmithResult s = smith_normal_form(Mat{}, 2);
    REQUIRE(s.d.empty());
    REQUIRE(static_cast<int>(s.v.size()) == 2);
    CHECK(determinant(s.v) == 1);
    check_certificate(Mat{}, 2);
}

TEST_CASE("zero matrix") {
    Mat m = {{0, 0}, {0, 0}, {0, 0}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.d == m);
    check_certificate(m, 2);
}

TEST_CASE("determinant") {
    CHECK(determinant(Mat{}) == 1);
    CHECK(determinant({{7}}) == 7);
    CHECK(determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
    CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("random matrices satisfy the certificate") {
    Rng rng(0x5eed5eed);
    for (int iter = 0; iter < 60; ++iter) {
        int rows = static_cast<int>(rng.range(0, 6));
        int cols = static_cast<int>(rng.range(1, 6));
        Mat m(rows, std::vector<mpz_class>(cols));
        for (auto& row : m)
            for (auto& x : row) x = rng.range(-9, 9);
        check_certificate(m, cols);
    }
}

} // TEST_SUITE
