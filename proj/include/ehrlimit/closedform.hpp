#pragma once

#include <vector>

#include "ehrlimit/int_polynomial.hpp"
#include "ehrlimit/numeric.hpp"

namespace ehrlimit {

/// f(k, h) = 2 [ C(k-2, 3(h-1)-k) + C(k-2, 3(h-1)-k-1) + C(k-2, 3(h-1)-k-2) ]
/// under the convention C(n, j) = 0 outside 0 <= j <= n. Counts the
/// bidiagonal m = 2 parallelepiped points at height h with lambda_2
/// denominator 2^k, for pairs with ceil(3(h-1)/2) <= k <= 3h-3.
Int f_kh(long k, long h);

/// Coefficient j of the bidiagonal m = 2 limit series
/// 1 + z + 4z^2 + 20z^3 + 84z^4 + 356z^5 + 1508z^6 + ...:
/// sum of f(k, j) over ceil(3(j-1)/2) <= k <= 3j-3, with j in {0, 1} -> 1.
Int thm_m2_coefficient(long j);

/// Literal sum of f(k, h) over h in [ceil((k+3)/3), floor((2k+3)/3)].
/// Equals 2^(k-1) for k >= 2; the k = 1 range is empty and the sum is 0
/// even though the point census at k = 1 is 1 = 2^0 (the lambda_2 = 1/2
/// point pairs with itself, so no f-value accounts for it).
Int lemma_sum(long k);

/// Numerators of the m = 2 base-case coefficient chain
/// lambda_{k-j} = (sum_{i=0}^{j+1} (-1)^i 2^{j+1-i}) / 2^{j+2} for
/// j = -1, 0, .., k-2 (the point whose tail entries never exceed 1/2).
/// The sequence 1, 1, 3, 5, 11, 21, .. satisfies n_j = n_{j-1} + 2 n_{j-2}.
std::vector<Int> jacobsthal_lambda_numerators(long k);

/// The base-case coefficient values themselves, indexed like the numerators.
std::vector<Rat> jacobsthal_base_lambda(long k);

/// True iff thm_m2_coefficient(i) = 4 h_{i-1} + h_{i-2} for all 4 <= i <= N.
bool recursion_check(long n);

/// h* of Delta_(1, q(n)) for n >= 2:
/// (1 + z^2 + .. + z^(2n-2)) (1 + 7z + 14z^2 + 7z^3 + z^4).
IntPolynomial q_of_n_hstar(long n);

}  // namespace ehrlimit
