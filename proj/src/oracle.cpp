#include "ehrlimit/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ehrlimit/fpp.hpp"
#include "ehrlimit/matrix.hpp"

namespace ehrlimit {

namespace {

// Membership as a conjunction of integer functionals:
//   row . (t, x_1, .., x_n) >= 0.
struct DilateCounter {
    int n = 0;
    std::vector<std::vector<Int>> rows;
    const std::vector<std::vector<Int>>* vertices = nullptr;

    Int count(long t) const {
        if (t == 0) return 1;
        std::vector<long> lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            Int mn = t * (*vertices)[0][i], mx = mn;
            for (const auto& v : *vertices) {
                Int c = t * v[i];
                if (c < mn) mn = c;
                if (c > mx) mx = c;
            }
            lo[i] = to_long(mn, "box bound");
            hi[i] = to_long(mx, "box bound");
        }

        Int total = 0;
        const long width0 = hi[0] - lo[0] + 1;
#pragma omp parallel
        {
            Int local = 0;
#pragma omp for schedule(dynamic, 1) nowait
            for (long s = 0; s < width0; ++s) {
                std::vector<Int> base(rows.size());
                for (size_t r = 0; r < rows.size(); ++r)
                    base[r] = rows[r][0] * t + rows[r][1] * (lo[0] + s);
                if (n == 1)
                    local += innermost_interval_is_single(base) ? 1 : 0;
                else
                    scan(1, lo, hi, base, local);
            }
#pragma omp critical
            total += local;
        }
        return total;
    }

  private:
    bool innermost_interval_is_single(const std::vector<Int>& base) const {
        for (const Int& b : base)
            if (b < 0) return false;
        return true;
    }

    void scan(int i, const std::vector<long>& lo, const std::vector<long>& hi,
              std::vector<Int>& base, Int& acc) const {
        if (i == n - 1) {
            // Intersect the per-row feasible intervals for the last coordinate.
            Int left = lo[i], right = hi[i];
            for (size_t r = 0; r < rows.size() && left <= right; ++r) {
                const Int& c = rows[r][i + 1];
                if (c == 0) {
                    if (base[r] < 0) return;
                } else if (c > 0) {
                    Int bound;  // x >= ceil(-base / c)
                    mpz_cdiv_q(bound.get_mpz_t(), Int(-base[r]).get_mpz_t(), c.get_mpz_t());
                    if (bound > left) left = bound;
                } else {
                    Int bound;  // x <= floor(base / -c)
                    mpz_fdiv_q(bound.get_mpz_t(), base[r].get_mpz_t(), Int(-c).get_mpz_t());
                    if (bound < right) right = bound;
                }
            }
            if (left <= right) acc += right - left + 1;
            return;
        }
        for (size_t r = 0; r < rows.size(); ++r) base[r] += rows[r][i + 1] * lo[i];
        for (long x = lo[i];; ++x) {
            scan(i + 1, lo, hi, base, acc);
            if (x == hi[i]) break;
            for (size_t r = 0; r < rows.size(); ++r) base[r] += rows[r][i + 1];
        }
        for (size_t r = 0; r < rows.size(); ++r) base[r] -= rows[r][i + 1] * hi[i];
    }
};

std::vector<Int> scale_to_integers(const std::vector<Rat>& row) {
    Int l = 1;
    for (const Rat& q : row) {
        Int den = q.get_den();
        l = l / gcd(l, den) * den;
    }
    std::vector<Int> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) out[i] = Int(row[i].get_num() * (l / row[i].get_den()));
    return out;
}

// Rows of B^{-1}, cleared to integers: membership of x in tP is the sign
// pattern of the solved coefficient vector for the right-hand side (t, x).
DilateCounter simplex_counter(const LatticeSimplex& p) {
    if (p.ambient_dim() != p.dim())
        throw std::invalid_argument("oracle: simplex must be full-dimensional");
    auto inv = invert(p.homogenized());
    if (!inv) throw std::logic_error("oracle: homogenized matrix is singular");
    DilateCounter c;
    c.n = p.ambient_dim();
    c.vertices = &p.vertices();
    for (const auto& row : *inv) c.rows.push_back(scale_to_integers(row));
    return c;
}

// Facet inequalities <a, x> <= c t, stored as (c, -a), from brute-force
// hyperplane enumeration over n-subsets of vertices.
DilateCounter polytope_counter(const VertexPolytope& p) {
    if (p.ambient_dim() != p.dim())
        throw std::invalid_argument("oracle: polytope must be full-dimensional");
    const int n = p.ambient_dim();
    const auto& vs = p.vertices();
    const int m = static_cast<int>(vs.size());

    std::set<std::vector<Int>> facets;
    std::vector<int> idx(n);
    // Iterate n-subsets of the vertex list.
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        do {
            // Solve <a, v> - c = 0 for the subset; nullspace of an n x (n+1) system.
            std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n + 1));
            for (int r = 0; r < n; ++r) {
                for (int j = 0; j < n; ++j) t[r][j] = Rat(vs[idx[r]][j]);
                t[r][n] = -1;
            }
            int rank = 0;
            std::vector<int> pivot_col;
            for (int col = 0; col <= n && rank < n; ++col) {
                int pr = rank;
                while (pr < n && t[pr][col] == 0) ++pr;
                if (pr == n) continue;
                std::swap(t[rank], t[pr]);
                Rat pv = t[rank][col];
                for (int j = col; j <= n; ++j) t[rank][j] /= pv;
                for (int r = 0; r < n; ++r) {
                    if (r == rank || t[r][col] == 0) continue;
                    Rat f = t[r][col];
                    for (int j = col; j <= n; ++j) t[r][j] -= f * t[rank][j];
                }
                pivot_col.push_back(col);
                ++rank;
            }
            if (rank < n) break;  // degenerate subset
            // Back out the solution with the free column set to 1.
            int free_col = 0;
            {
                std::vector<bool> isp(n + 1, false);
                for (int c : pivot_col) isp[c] = true;
                while (isp[free_col]) ++free_col;
            }
            std::vector<Rat> sol(n + 1);
            sol[free_col] = 1;
            for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = -t[r][free_col];

            std::vector<Int> w = scale_to_integers(sol);  // (a_1..a_n, c)
            // Orient so every vertex satisfies <a, v> <= c.
            bool le = true, ge = true;
            for (const auto& v : vs) {
                Int s = -w[n];
                for (int j = 0; j < n; ++j) s += w[j] * v[j];
                if (s > 0) le = false;
                if (s < 0) ge = false;
            }
            if (!le && !ge) break;
            if (!le)
                for (auto& e : w) e = -e;
            Int g = 0;
            for (const auto& e : w) g = gcd(g, e);
            if (g > 1)
                for (auto& e : w) e /= g;
            // Store as (c, -a): row . (t, x) = c t - <a, x> >= 0.
            std::vector<Int> row(n + 1);
            row[0] = w[n];
            for (int j = 0; j < n; ++j) row[j + 1] = -w[j];
            facets.insert(std::move(row));
        } while (false);

        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (facets.empty()) throw std::logic_error("oracle: no facets found");

    DilateCounter c;
    c.n = n;
    c.vertices = &p.vertices();
    c.rows.assign(facets.begin(), facets.end());
    return c;
}

SeriesPrefix prefix_from(const DilateCounter& c, long t_max) {
    if (t_max < 0) throw std::invalid_argument("ehrhart_prefix_by_counting: T must be >= 0");
    std::vector<Int> out(static_cast<size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t) out[t] = c.count(t);
    return SeriesPrefix(std::move(out), Stability::exact);
}

}  // namespace

Int count_dilate_points(const LatticeSimplex& p, long t) {
    if (t < 0) throw std::invalid_argument("count_dilate_points: t must be >= 0");
    return simplex_counter(p).count(t);
}

Int count_dilate_points(const VertexPolytope& p, long t) {
    if (t < 0) throw std::invalid_argument("count_dilate_points: t must be >= 0");
    return polytope_counter(p).count(t);
}

SeriesPrefix ehrhart_prefix_by_counting(const LatticeSimplex& p, long t_max) {
    return prefix_from(simplex_counter(p), t_max);
}

SeriesPrefix ehrhart_prefix_by_counting(const VertexPolytope& p, long t_max) {
    return prefix_from(polytope_counter(p), t_max);
}

bool consistency_check(const LatticeSimplex& p, long t_max) {
    SeriesPrefix counted = ehrhart_prefix_by_counting(p, t_max);
    SeriesPrefix expanded = expand_rational_prefix(hstar(p), p.dim() + 1, t_max);
    return prefix_agree(counted, expanded, t_max);
}

}  // namespace ehrlimit
