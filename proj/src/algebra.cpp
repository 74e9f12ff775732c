#include <stdexcept>

#include "ehrlimit/int_polynomial.hpp"
#include "ehrlimit/series_prefix.hpp"

namespace ehrlimit {

IntPolynomial::IntPolynomial(std::initializer_list<long> cs) {
    coeffs_.reserve(cs.size());
    for (long c : cs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long IntPolynomial::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    return static_cast<long>(coeffs_.size()) - 1;
}

const Int& IntPolynomial::at(long i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

Int IntPolynomial::sum() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Int> out(ac.size() + bc.size() - 1);
    for (size_t i = 0; i < ac.size(); ++i)
        for (size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    return IntPolynomial(std::move(out));
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::certified: return "certified";
        case Stability::empirical: return "empirical";
        case Stability::exact: return "exact";
    }
    return "?";
}

SeriesPrefix::SeriesPrefix(std::vector<Int> cs, Stability tag)
    : coeffs(std::move(cs)), tags(coeffs.size(), tag) {}

SeriesPrefix expand_rational_prefix(const IntPolynomial& numer, long pole_order, long r) {
    if (pole_order < 0) throw std::invalid_argument("expand_rational_prefix: pole_order < 0");
    if (r < 0) throw std::invalid_argument("expand_rational_prefix: r < 0");
    std::vector<Int> out(static_cast<size_t>(r) + 1);
    for (long t = 0; t <= r; ++t) {
        if (pole_order == 0) {
            out[t] = numer.at(t);
            continue;
        }
        Int acc = 0;
        const long jmax = numer.is_zero() ? -1 : numer.degree();
        for (long j = 0; j <= jmax && j <= t; ++j)
            acc += numer.at(j) * binomial(t - j + pole_order - 1, pole_order - 1);
        out[t] = acc;
    }
    return SeriesPrefix(std::move(out), Stability::exact);
}

bool prefix_agree(const SeriesPrefix& a, const SeriesPrefix& b, long r) {
    if (a.degree_bound() < r || b.degree_bound() < r)
        throw std::invalid_argument("prefix_agree: truncation shorter than requested degree");
    for (long i = 0; i <= r; ++i)
        if (a.coeffs[i] != b.coeffs[i]) return false;
    return true;
}

}  // namespace ehrlimit
