#include "ehrlimit/matrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ehrlimit {

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows;
    if (n == 0) return 1;

    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Gauss-Jordan over Q on [A | rhs...]; rhs has `extra` columns.
// Returns false when A is singular.
bool gauss_jordan(std::vector<std::vector<Rat>>& t, int n, int extra) {
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && t[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(t[c], t[p]);
        Rat pivot = t[c][c];
        for (int j = c; j < n + extra; ++j) t[c][j] /= pivot;
        for (int r = 0; r < n; ++r) {
            if (r == c || t[r][c] == 0) continue;
            Rat f = t[r][c];
            for (int j = c; j < n + extra; ++j) t[r][j] -= f * t[c][j];
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<Rat>> solve(const IntMatrix& a, const std::vector<Rat>& b) {
    if (a.rows != a.cols || static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve: shape mismatch");
    const int n = a.rows;
    std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = Rat(a.at(i, j));
        t[i][n] = b[i];
    }
    if (!gauss_jordan(t, n, 1)) return std::nullopt;
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = t[i][n];
    return x;
}

std::optional<std::vector<std::vector<Rat>>> invert(const IntMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("invert: matrix not square");
    const int n = a.rows;
    std::vector<std::vector<Rat>> t(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = Rat(a.at(i, j));
        t[i][n + i] = 1;
    }
    if (!gauss_jordan(t, n, n)) return std::nullopt;
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = t[i][n + j];
    return inv;
}

}  // namespace ehrlimit
