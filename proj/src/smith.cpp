#include "abgrow/smith.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>
#include <utility>

namespace abgrow {

Mat identity_mat(int n) {
    Mat m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int m = static_cast<int>(a.size());
    int k = m ? static_cast<int>(a[0].size()) : 0;
    int n = b.empty() ? 0 : static_cast<int>(b[0].size());
    if (k != static_cast<int>(b.size())) fail(errc::internal, "mat_mul shape mismatch");
    Mat c(m, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

mpz_class determinant(Mat a) {
    int n = static_cast<int>(a.size());
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n) fail(errc::internal, "determinant: not square");
    if (n == 0) return 1;
    // Bareiss
    mpz_class sign = 1, prev = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (a[t][t] == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a[i][t] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[t], a[p]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[t][t] - a[i][t] * a[t][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = q;
            }
        prev = a[t][t];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

struct Snf {
    Mat d, u, v;
    int m, n;

    void row_add(int dst, int src, const mpz_class& c) {
        for (int j = 0; j < n; ++j) d[dst][j] += c * d[src][j];
        for (int j = 0; j < m; ++j) u[dst][j] += c * u[src][j];
    }
    void col_add(int dst, int src, const mpz_class& c) {
        for (int i = 0; i < m; ++i) d[i][dst] += c * d[i][src];
        for (int i = 0; i < n; ++i) v[i][dst] += c * v[i][src];
    }
    void row_swap(int a, int b) {
        if (a == b) return;
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
        for (int i = 0; i < n; ++i) std::swap(v[i][a], v[i][b]);
    }
    void row_negate(int a) {
        for (int j = 0; j < n; ++j) d[a][j] = -d[a][j];
        for (int j = 0; j < m; ++j) u[a][j] = -u[a][j];
    }
    // simultaneous column mix: (ci, cj) <- (p*ci + q*cj, r*ci + s*cj), ps - qr = +-1
    void col_mix(int ci, int cj, const mpz_class& p, const mpz_class& q, const mpz_class& r,
                 const mpz_class& s) {
        for (int i = 0; i < m; ++i) {
            mpz_class a = d[i][ci], b = d[i][cj];
            d[i][ci] = p * a + q * b;
            d[i][cj] = r * a + s * b;
        }
        for (int i = 0; i < n; ++i) {
            mpz_class a = v[i][ci], b = v[i][cj];
            v[i][ci] = p * a + q * b;
            v[i][cj] = r * a + s * b;
        }
    }

    void diagonalize() {
        int rmin = std::min(m, n);
        for (int t = 0; t < rmin; ++t) {
            // smallest nonzero entry in the remaining block becomes the pivot
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (d[i][j] == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(d[i][j].get_mpz_t(), d[pi][pj].get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);
            while (true) {
                bool dirty = false;
                for (int i = t + 1; i < m; ++i) {
                    if (d[i][t] == 0) continue;
                    mpz_class q = d[i][t] / d[t][t];
                    if (q != 0) row_add(i, t, -q);
                    if (d[i][t] != 0) { row_swap(t, i); dirty = true; }
                }
                if (dirty) continue;
                for (int j = t + 1; j < n; ++j) {
                    if (d[t][j] == 0) continue;
                    mpz_class q = d[t][j] / d[t][t];
                    if (q != 0) col_add(j, t, -q);
                    if (d[t][j] != 0) { col_swap(t, j); dirty = true; }
                }
                if (dirty) continue;
                // pivot must divide every entry of the remaining block
                bool fixed = false;
                for (int i = t + 1; i < m && !fixed; ++i)
                    for (int j = t + 1; j < n && !fixed; ++j)
                        if (d[i][j] % d[t][t] != 0) {
                            row_add(t, i, 1);
                            fixed = true;
                        }
                if (!fixed) break;
            }
        }
    }

    void fix_pair(int i, int j) {
        mpz_class a = d[i][i], b = d[j][j];
        if (a == 0 && b == 0) return;
        if (a != 0 && b % a == 0) return;
        row_add(i, j, 1); // d[i][j] = b
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        col_mix(i, j, x, y, -(b / g), a / g);
        // d[i][*] = (g, 0); clear the leftover below the new pivot
        if (d[j][i] != 0) row_add(j, i, -(d[j][i] / g));
    }

    void normalize() {
        int rmin = std::min(m, n);
        for (int i = 0; i < rmin; ++i)
            if (d[i][i] < 0) row_negate(i);
        for (int i = 0; i < rmin; ++i)
            for (int j = i + 1; j < rmin; ++j) {
                fix_pair(i, j);
                if (d[i][i] < 0) row_negate(i);
                if (d[j][j] < 0) row_negate(j);
            }
    }

    bool is_clean() const {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                if (i != j && d[i][j] != 0) return false;
                if (i == j && d[i][j] < 0) return false;
            }
        int rmin = std::min(m, n);
        for (int i = 0; i + 1 < rmin; ++i) {
            const mpz_class &a = d[i][i], &b = d[i + 1][i + 1];
            if (a == 0 && b != 0) return false;
            if (a != 0 && b % a != 0) return false;
        }
        return true;
    }
};

int cols_of(const Mat& input, int cols) {
    if (!input.empty()) {
        int n = static_cast<int>(input[0].size());
        for (const auto& row : input)
            if (static_cast<int>(row.size()) != n)
                fail(errc::internal, "smith_normal_form: ragged matrix");
        return n;
    }
    if (cols < 0) fail(errc::internal, "smith_normal_form: empty matrix without column count");
    return cols;
}

} // namespace

SmithResult smith_normal_form(const Mat& input, int cols) {
    Snf s;
    s.m = static_cast<int>(input.size());
    s.n = cols_of(input, cols);
    s.d = input;
    s.u = identity_mat(s.m);
    s.v = identity_mat(s.n);
    s.diagonalize();
    s.normalize();
    if (!s.is_clean()) fail(errc::internal, "smith_normal_form: normalization failed");
    return SmithResult{std::move(s.d), std::move(s.u), std::move(s.v)};
}

} // namespace abgrow
