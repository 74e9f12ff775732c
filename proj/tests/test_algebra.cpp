#include <doctest.h>

#include <cstdint>

#include "ehrlimit/int_polynomial.hpp"
#include "ehrlimit/series_prefix.hpp"

using namespace ehrlimit;

namespace {

// Small deterministic generator for property checks.
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    long next(long bound) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((s >> 33) % bound);
    }
    IntPolynomial poly() {
        std::vector<Int> cs(1 + next(5));
        for (auto& c : cs) c = next(19) - 9;
        return IntPolynomial(std::move(cs));
    }
};

std::vector<Int> coeff_list(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(IntPolynomial{1, 1}, IntPolynomial{1, 1}) == IntPolynomial{1, 2, 1});
    IntPolynomial prod = poly_mul(IntPolynomial{1, 0, 1}, IntPolynomial{1, 7, 14, 7, 1});
    CHECK(prod == IntPolynomial{1, 7, 15, 14, 15, 7, 1});
    CHECK(prod.sum() == 60);
    IntPolynomial p{3, 0, 2, 5};
    CHECK(poly_mul(p, IntPolynomial::one()) == p);
}

TEST_CASE("zero polynomial") {
    IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.degree(), std::domain_error);
    CHECK(poly_mul(zero, IntPolynomial{1, 2}).is_zero());
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
}

TEST_CASE("poly_mul is associative and commutative") {
    Lcg rng(42);
    for (int it = 0; it < 200; ++it) {
        IntPolynomial a = rng.poly(), b = rng.poly(), c = rng.poly();
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    }
}

TEST_CASE("expand_rational_prefix examples") {
    // h*(S_2) / (1-z)^3: i(S_2; t) = 1, 4, 10, ..
    auto s2 = expand_rational_prefix(IntPolynomial{1, 1, 1}, 3, 2);
    CHECK(s2.coeffs == coeff_list({1, 4, 10}));
    CHECK(s2.tags == std::vector<Stability>(3, Stability::exact));

    auto geo = expand_rational_prefix(IntPolynomial{1}, 1, 4);
    CHECK(geo.coeffs == coeff_list({1, 1, 1, 1, 1}));

    auto padded = expand_rational_prefix(IntPolynomial{1, 1}, 0, 3);
    CHECK(padded.coeffs == coeff_list({1, 1, 0, 0}));
}

TEST_CASE("expansion of a nonnegative numerator with h(0)=1 stays positive") {
    Lcg rng(7);
    for (int it = 0; it < 100; ++it) {
        std::vector<Int> cs(1 + rng.next(6));
        cs[0] = 1;
        for (size_t i = 1; i < cs.size(); ++i) cs[i] = rng.next(9);
        long pole = 1 + rng.next(5);
        auto pre = expand_rational_prefix(IntPolynomial(std::move(cs)), pole, 8);
        for (const Int& c : pre.coeffs) CHECK(c > 0);
    }
}

TEST_CASE("expansion commutes with polynomial factors") {
    // expand(a*b / (1-z)^k) = expand(a / (1-z)^k) convolved with b, degree <= r.
    Lcg rng(11);
    for (int it = 0; it < 100; ++it) {
        IntPolynomial a = rng.poly(), b = rng.poly();
        long k = 1 + rng.next(4);
        const long r = 7;
        auto lhs = expand_rational_prefix(poly_mul(a, b), k, r);
        auto ea = expand_rational_prefix(a, k, r);
        for (long t = 0; t <= r; ++t) {
            Int conv = 0;
            for (long j = 0; j <= t; ++j) conv += b.at(j) * ea.coeffs[t - j];
            CHECK(lhs.coeffs[t] == conv);
        }
    }
}

TEST_CASE("prefix_agree") {
    SeriesPrefix a(coeff_list({1, 1, 4}), Stability::exact);
    SeriesPrefix b(coeff_list({1, 1, 4, 20}), Stability::empirical);
    CHECK(prefix_agree(a, b, 2));
    CHECK(prefix_agree(a, a, a.degree_bound()));
    SeriesPrefix c(coeff_list({1, 1}), Stability::exact);
    SeriesPrefix d(coeff_list({1, 2}), Stability::exact);
    CHECK_FALSE(prefix_agree(c, d, 1));
    CHECK_THROWS_AS(prefix_agree(c, b, 3), std::invalid_argument);
}
