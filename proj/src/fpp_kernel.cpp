#include <omp.h>

#include <cstdint>
#include <numeric>

#include "ehrlimit/fpp.hpp"

namespace ehrlimit {

namespace {

// Counting over the mixed-radix residue space of an upper-triangular
// homogenized matrix. For residues z with z_i in [0, B_ii), the coefficient
// vector is recovered bottom-up as integer numerators n_i over the suffix
// diagonal products D_i = prod_{j >= i} B_jj:
//
//   T_i = sum_{j > i} B_ij * (D_{i+1} / D_j) * n_j
//   n_i = (z_i * D_{i+1} - T_i) mod D_i
//
// and the height is (n_0 + T_0) / D_1. Every quantity is bounded by
// row_bound_i = sum_j mult_ij * (D_j - 1), so the machine-word instantiation
// is selected only when those bounds fit; otherwise the same recursion runs
// on arbitrary-precision integers.
template <class I>
struct TriangularPlan {
    int n = 0;
    std::vector<long> diag;
    std::vector<I> suffix;  // suffix[i] = D_i, suffix[n] = 1
    std::vector<std::vector<std::pair<int, I>>> rows;

    explicit TriangularPlan(const IntMatrix& b) : n(b.rows), diag(n), suffix(n + 1), rows(n) {
        std::vector<Int> big(n + 1);
        big[n] = 1;
        for (int i = n - 1; i >= 0; --i) {
            diag[i] = to_long(b.at(i, i), "diagonal entry");
            big[i] = diag[i] * big[i + 1];
        }
        for (int i = 0; i <= n; ++i) {
            if constexpr (std::is_same_v<I, Int>)
                suffix[i] = big[i];
            else
                suffix[i] = to_long(big[i], "suffix product");
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (b.at(i, j) != 0) {
                    Int mult = b.at(i, j) * (big[i + 1] / big[j]);
                    if constexpr (std::is_same_v<I, Int>)
                        rows[i].emplace_back(j, mult);
                    else
                        rows[i].emplace_back(j, to_long(mult, "row multiplier"));
                }
    }
};

template <class I>
struct TriangularWalker {
    const TriangularPlan<I>& plan;
    std::vector<I> num;
    std::vector<std::uint64_t>& counts;

    TriangularWalker(const TriangularPlan<I>& p, std::vector<std::uint64_t>& c)
        : plan(p), num(p.n), counts(c) {}

    I tail_sum(int i) const {
        I t = 0;
        for (const auto& [j, mult] : plan.rows[i]) t += mult * num[j];
        return t;
    }

    // n_i for residue z_i given the tail sum; subsequent residues advance by
    // adding D_{i+1} with a single conditional wrap.
    I first_numerator(int i, const I& tail) const {
        I v = (-tail) % plan.suffix[i];
        if (v < 0) v += plan.suffix[i];
        return v;
    }

    void descend(int i) {
        if (i == 0) {
            I tail = tail_sum(0);
            I v = first_numerator(0, tail);
            for (long z = 0; z < plan.diag[0]; ++z) {
                I h = (v + tail) / plan.suffix[1];
                if constexpr (std::is_same_v<I, Int>)
                    ++counts[to_long(h, "height")];
                else
                    ++counts[static_cast<size_t>(h)];
                v += plan.suffix[1];
                if (v >= plan.suffix[0]) v -= plan.suffix[0];
            }
            return;
        }
        I tail = tail_sum(i);
        I v = first_numerator(i, tail);
        for (long z = 0; z < plan.diag[i]; ++z) {
            num[i] = v;
            descend(i - 1);
            v += plan.suffix[i + 1];
            if (v >= plan.suffix[i]) v -= plan.suffix[i];
        }
    }

    // Pin residues for the top `levels` coordinates from the flat task index,
    // then walk the remaining subtree. levels stays below the coordinate
    // count, so descend always has the height level left to process.
    void run_task(int levels, std::uint64_t task) {
        int i = plan.n - 1;
        for (int l = 0; l < levels; ++l, --i) {
            std::uint64_t radix = static_cast<std::uint64_t>(plan.diag[i]);
            I zi = static_cast<long>(task % radix);
            task /= radix;
            I v = (zi * plan.suffix[i + 1] - tail_sum(i)) % plan.suffix[i];
            if (v < 0) v += plan.suffix[i];
            num[i] = v;
        }
        descend(i);
    }
};

template <class I>
std::vector<std::uint64_t> count_heights(const IntMatrix& b, int threads) {
    TriangularPlan<I> plan(b);
    const int n = plan.n;

    // Flatten enough top levels of the walk to feed the worker pool.
    int workers = threads > 0 ? threads : omp_get_max_threads();
    std::uint64_t want = std::max<std::uint64_t>(64, 16ull * workers);
    int levels = 0;
    std::uint64_t tasks = 1;
    while (levels < n - 1 && tasks < want) {
        tasks *= static_cast<std::uint64_t>(plan.diag[n - 1 - levels]);
        ++levels;
    }

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 2, 0));
#pragma omp parallel num_threads(workers)
    {
        int me = omp_get_thread_num();
        TriangularWalker<I> walker(plan, partial[me]);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t)
            walker.run_task(levels, static_cast<std::uint64_t>(t));
    }

    std::vector<std::uint64_t> counts(n + 2, 0);
    for (const auto& p : partial)
        for (int h = 0; h < n + 2; ++h) counts[h] += p[h];
    return counts;
}

// Machine-word eligibility: every row tail plus the residue term must stay
// below 2^62.
bool fits_machine_words(const IntMatrix& b) {
    const int n = b.rows;
    const Int limit = Int(1) << 62;
    std::vector<Int> suffix(n + 1);
    suffix[n] = 1;
    for (int i = n - 1; i >= 0; --i) suffix[i] = b.at(i, i) * suffix[i + 1];
    if (suffix[0] >= limit) return false;
    for (int i = 0; i < n; ++i) {
        Int bound = suffix[i];  // covers z_i * D_{i+1} and n_i
        for (int j = i + 1; j < n; ++j)
            if (b.at(i, j) != 0) bound += b.at(i, j) * (suffix[i + 1] / suffix[j]) * (suffix[j] - 1);
        if (bound >= limit) return false;
    }
    return true;
}

IntPolynomial counts_to_poly(const std::vector<std::uint64_t>& counts) {
    std::vector<Int> cs(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) cs[i] = Int(static_cast<unsigned long>(counts[i]));
    return IntPolynomial(std::move(cs));
}

IntPolynomial hstar_delta_counts(const LatticeSimplex& p, const HstarOptions& opts) {
    const auto& q = *p.delta_q();
    Int n = std::accumulate(q.begin(), q.end(), Int(1));
    if (n > opts.budget) throw BudgetError(n, opts.budget);
    std::vector<Int> counts(p.dim() + 2);
    for (Int bb = 0; bb < n; ++bb) {
        Int total = bb;
        for (const Int& qi : q) total += (bb * qi) % n;
        counts[to_long(total / n, "height")] += 1;
    }
    return IntPolynomial(std::move(counts));
}

}  // namespace

IntPolynomial hstar(const LatticeSimplex& p, const HstarOptions& opts) {
    if (p.hnf_flag()) {
        Int det = p.normalized_volume();
        if (det > opts.budget) throw BudgetError(det, opts.budget);
        const IntMatrix& b = p.homogenized();
        bool narrow = !opts.wide_arithmetic && fits_machine_words(b);
        auto counts =
            narrow ? count_heights<long long>(b, opts.threads) : count_heights<Int>(b, opts.threads);
        return counts_to_poly(counts);
    }
    if (p.delta_q()) return hstar_delta_counts(p, opts);
    throw UnsupportedFormError(
        "hstar: simplex is neither in Hermite normal form nor of the form conv{e_i, -q}");
}

}  // namespace ehrlimit
