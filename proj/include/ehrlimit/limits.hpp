#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "ehrlimit/family.hpp"
#include "ehrlimit/series_prefix.hpp"

namespace ehrlimit {

struct LimitOptions {
    Int budget = HstarOptions::default_budget();
    int threads = 0;
};

/// Result of a stabilization run. `dimensions` lists every schedule
/// parameter that was evaluated; `window` is 0 in certified mode. When
/// empirical stabilization fails within the schedule bound, `stabilized`
/// is false and `unstable` lists the offending coefficient indices.
struct LimitReport {
    FamilySpec family;
    SeriesPrefix prefix;
    std::vector<long> dimensions;
    long window = 0;
    bool stabilized = true;
    std::vector<long> unstable;
};

/// Smallest multidiagonal dimension at which coefficients 0..r are protected
/// by the height bound p_0 >= floor(k/s) / a_1: every point appearing only
/// beyond it has height > r. Requires s >= 2 and gcd(a_1, a_2) = 1.
long certified_dimension(const std::vector<long>& a, long r);

/// Bidiagonal analogue via height >= floor(k/2) / m: d = 2 r m + 3.
long certified_dimension_bidiagonal(long m, long r);

long certified_dimension(const FamilySpec& fam, long r);

/// Coefficients 0..r of the family's limit series, tagged certified, from a
/// single evaluation at the certificate dimension (bidiagonal) or an
/// evaluation at the certificate dimension cross-checked at the next two
/// (multidiagonal). Throws BudgetError when any required enumeration
/// exceeds the budget, naming the required determinant.
LimitReport limit_prefix_certified(const FamilySpec& fam, long r, const LimitOptions& opts = {});

/// Windowed agreement over an arbitrary polynomial sequence: evaluates
/// param = start..param_max until coefficients 0..r agree across `window`
/// consecutive members.
LimitReport stabilize_sequence(const FamilySpec& fam,
                               const std::function<IntPolynomial(long)>& member, long start,
                               long r, long window, long param_max);

/// Windowed agreement along the family's dimension schedule; coefficients
/// are tagged empirical. Reports non-stabilization instead of throwing.
LimitReport stabilize_empirical(const FamilySpec& fam, long r, long window, long d_max,
                                const LimitOptions& opts = {});

/// Prefix of h*(Q;z) / (1-z)^k through degree r, the limit of the free sums
/// Q (+) (S_d (+) .. (+) S_d). Requires constant term 1.
SeriesPrefix free_sum_limit_prefix(const IntPolynomial& q_hstar, long k, long r);

nlohmann::ordered_json limit_report_json(const LimitReport& report);

}  // namespace ehrlimit
