#include "ehrlimit/closedform.hpp"

#include <stdexcept>

namespace ehrlimit {

Int f_kh(long k, long h) {
    if (k < 1 || h < 1) throw std::invalid_argument("f_kh: k and h must be >= 1");
    const long t = 3 * (h - 1) - k;
    return 2 * (binomial(k - 2, t) + binomial(k - 2, t - 1) + binomial(k - 2, t - 2));
}

Int thm_m2_coefficient(long j) {
    if (j < 0) throw std::invalid_argument("thm_m2_coefficient: j must be >= 0");
    if (j <= 1) return 1;
    Int acc = 0;
    const long lo = (3 * (j - 1) + 1) / 2;  // ceil(3(j-1)/2)
    for (long k = lo; k <= 3 * j - 3; ++k) acc += f_kh(k, j);
    return acc;
}

Int lemma_sum(long k) {
    if (k < 1) throw std::invalid_argument("lemma_sum: k must be >= 1");
    const long lo = (k + 3 + 2) / 3;  // ceil((k+3)/3)
    const long hi = (2 * k + 3) / 3;
    Int acc = 0;
    for (long h = lo; h <= hi; ++h) acc += f_kh(k, h);
    return acc;
}

std::vector<Int> jacobsthal_lambda_numerators(long k) {
    if (k < 1) throw std::invalid_argument("jacobsthal_lambda_numerators: k must be >= 1");
    std::vector<Int> out;
    out.reserve(k);
    for (long j = -1; j <= k - 2; ++j) {
        Int s = 0;
        for (long i = 0; i <= j + 1; ++i) {
            Int term = int_pow(2, j + 1 - i);
            s += (i % 2 == 0) ? term : -term;
        }
        // The alternating sum is odd, so the fraction s / 2^(j+2) is reduced.
        out.push_back(s);
    }
    return out;
}

std::vector<Rat> jacobsthal_base_lambda(long k) {
    std::vector<Int> nums = jacobsthal_lambda_numerators(k);
    std::vector<Rat> out;
    out.reserve(nums.size());
    for (long j = -1; j <= k - 2; ++j) {
        Rat v(nums[j + 1], int_pow(2, j + 2));
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

bool recursion_check(long n) {
    if (n < 4) throw std::invalid_argument("recursion_check: N must be >= 4");
    Int prev2 = thm_m2_coefficient(2);
    Int prev1 = thm_m2_coefficient(3);
    for (long i = 4; i <= n; ++i) {
        Int cur = thm_m2_coefficient(i);
        if (cur != 4 * prev1 + prev2) return false;
        prev2 = prev1;
        prev1 = cur;
    }
    return true;
}

IntPolynomial q_of_n_hstar(long n) {
    if (n < 2) throw std::invalid_argument("q_of_n_hstar: n must be >= 2");
    std::vector<Int> even(static_cast<size_t>(2 * n - 1), Int(0));
    for (long i = 0; i <= 2 * n - 2; i += 2) even[i] = 1;
    return poly_mul(IntPolynomial(std::move(even)), IntPolynomial{1, 7, 14, 7, 1});
}

}  // namespace ehrlimit
