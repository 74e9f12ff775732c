#pragma once

#include <vector>

#include "ehrlimit/int_polynomial.hpp"
#include "ehrlimit/numeric.hpp"

namespace ehrlimit {

/// How a prefix coefficient was established.
///  - exact:     computed by a closed identity, final by construction
///  - certified: protected by a height-bound certificate at a known dimension
///  - empirical: agreed across a window of consecutive dimensions
enum class Stability { certified, empirical, exact };

const char* stability_name(Stability s);

/// Certified initial segment of a power series in Z[[z]].
struct SeriesPrefix {
    std::vector<Int> coeffs;
    std::vector<Stability> tags;

    SeriesPrefix() = default;
    SeriesPrefix(std::vector<Int> cs, Stability tag);

    long degree_bound() const { return static_cast<long>(coeffs.size()) - 1; }

    bool operator==(const SeriesPrefix&) const = default;
};

/// Prefix of numer(z) / (1-z)^pole_order through degree r; coefficient of z^t
/// is sum_j numer_j * C(t-j+pole_order-1, pole_order-1). pole_order = 0 returns
/// numer truncated/padded to degree r. All indices are tagged exact.
SeriesPrefix expand_rational_prefix(const IntPolynomial& numer, long pole_order, long r);

/// True iff coefficients 0..r agree. Throws when either prefix is too short.
bool prefix_agree(const SeriesPrefix& a, const SeriesPrefix& b, long r);

}  // namespace ehrlimit
