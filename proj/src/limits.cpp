#include "ehrlimit/limits.hpp"

#include <numeric>
#include <stdexcept>

namespace ehrlimit {

namespace {

std::vector<Int> padded_prefix(const IntPolynomial& p, long r) {
    std::vector<Int> out(static_cast<size_t>(r) + 1);
    for (long i = 0; i <= r; ++i) out[i] = p.at(i);
    return out;
}

void require_certifiable(const FamilySpec& fam) {
    if (fam.kind == FamilyKind::bidiagonal) return;
    if (fam.kind == FamilyKind::multidiagonal) {
        if (fam.a.size() < 2 || std::gcd(fam.a[0], fam.a[1]) != 1)
            throw std::invalid_argument(
                "certified mode requires a multidiagonal band with gcd(a_1, a_2) = 1");
        return;
    }
    throw std::invalid_argument("certified mode covers only the bidiagonal and multidiagonal families");
}

}  // namespace

long certified_dimension(const std::vector<long>& a, long r) {
    if (r < 0) throw std::invalid_argument("certified_dimension: r must be >= 0");
    if (a.size() < 2 || std::gcd(a[0], a[1]) != 1)
        throw std::invalid_argument("certified_dimension: requires gcd(a_1, a_2) = 1");
    const long s = static_cast<long>(a.size());
    // Points appearing only beyond D have largest nonzero index k > D, hence
    // height >= floor(k/s)/a_1 > r once k >= s (r a_1 + 1).
    return s * (r * a[0] + 1);
}

long certified_dimension_bidiagonal(long m, long r) {
    if (m < 2) throw std::invalid_argument("certified_dimension_bidiagonal: m must be >= 2");
    if (r < 0) throw std::invalid_argument("certified_dimension_bidiagonal: r must be >= 0");
    // New points at dimensions beyond d carry code k >= d - 1, hence height
    // >= floor(k/2)/m > r once d >= 2 r m + 3.
    return 2 * r * m + 3;
}

long certified_dimension(const FamilySpec& fam, long r) {
    require_certifiable(fam);
    if (fam.kind == FamilyKind::bidiagonal) return certified_dimension_bidiagonal(fam.m, r);
    return certified_dimension(fam.a, r);
}

LimitReport limit_prefix_certified(const FamilySpec& fam, long r, const LimitOptions& opts) {
    fam.validate();
    require_certifiable(fam);
    const long dc = certified_dimension(fam, r);
    HstarOptions hopts{opts.budget, opts.threads};

    LimitReport report;
    report.family = fam;
    report.window = 0;

    if (fam.kind == FamilyKind::bidiagonal) {
        // Points with code k <= d - 2 persist unchanged at every higher
        // dimension, so one evaluation at the certificate dimension is final.
        IntPolynomial h = family_member_hstar(fam, dc, hopts);
        report.prefix = SeriesPrefix(padded_prefix(h, r), Stability::certified);
        report.dimensions = {dc};
        return report;
    }

    // Multidiagonal: evaluate at the certificate dimension and re-check the
    // prefix at the next two dimensions.
    std::vector<Int> first;
    for (long d = dc; d <= dc + 2; ++d) {
        std::vector<Int> cur = padded_prefix(family_member_hstar(fam, d, hopts), r);
        if (d == dc)
            first = cur;
        else if (cur != first)
            throw std::logic_error("certified prefix changed above the certificate dimension");
        report.dimensions.push_back(d);
    }
    report.prefix = SeriesPrefix(std::move(first), Stability::certified);
    return report;
}

LimitReport stabilize_sequence(const FamilySpec& fam,
                               const std::function<IntPolynomial(long)>& member, long start,
                               long r, long window, long param_max) {
    if (r < 0) throw std::invalid_argument("stabilize: r must be >= 0");
    if (window < 2) throw std::invalid_argument("stabilize: window must be >= 2");
    if (param_max < start) throw std::invalid_argument("stabilize: empty schedule");

    LimitReport report;
    report.family = fam;
    report.window = window;

    std::vector<std::vector<Int>> recent;
    for (long d = start; d <= param_max; ++d) {
        recent.push_back(padded_prefix(member(d), r));
        if (static_cast<long>(recent.size()) > window) recent.erase(recent.begin());
        report.dimensions.push_back(d);
        if (static_cast<long>(recent.size()) == window) {
            bool agree = true;
            for (size_t i = 1; i < recent.size() && agree; ++i) agree = recent[i] == recent[0];
            if (agree) {
                report.prefix = SeriesPrefix(recent.back(), Stability::empirical);
                return report;
            }
        }
    }

    report.stabilized = false;
    report.prefix = SeriesPrefix(recent.back(), Stability::empirical);
    for (long i = 0; i <= r; ++i)
        for (size_t w = 1; w < recent.size(); ++w)
            if (recent[w][i] != recent[0][i]) {
                report.unstable.push_back(i);
                break;
            }
    return report;
}

LimitReport stabilize_empirical(const FamilySpec& fam, long r, long window, long d_max,
                                const LimitOptions& opts) {
    fam.validate();
    if (!fam.has_schedule())
        throw std::invalid_argument("stabilize_empirical: family has no dimension schedule");
    HstarOptions hopts{opts.budget, opts.threads};
    return stabilize_sequence(
        fam, [&](long d) { return family_member_hstar(fam, d, hopts); }, fam.schedule_start(), r,
        window, d_max);
}

SeriesPrefix free_sum_limit_prefix(const IntPolynomial& q_hstar, long k, long r) {
    if (k < 1) throw std::invalid_argument("free_sum_limit_prefix: k must be >= 1");
    if (q_hstar.at(0) != 1)
        throw std::invalid_argument("free_sum_limit_prefix: numerator must have constant term 1");
    return expand_rational_prefix(q_hstar, k, r);
}

nlohmann::ordered_json limit_report_json(const LimitReport& report) {
    nlohmann::ordered_json j;
    j["family"] = report.family.to_json();
    nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
    for (const Int& c : report.prefix.coeffs) prefix.push_back(to_long(c, "prefix coefficient"));
    j["prefix"] = std::move(prefix);
    nlohmann::ordered_json modes = nlohmann::ordered_json::array();
    for (Stability s : report.prefix.tags) modes.push_back(stability_name(s));
    j["modes"] = std::move(modes);
    j["dimensions"] = report.dimensions;
    j["window"] = report.window;
    j["stabilized"] = report.stabilized;
    j["unstable"] = report.unstable;
    return j;
}

}  // namespace ehrlimit
