#include <doctest.h>

#include "ehrlimit/closedform.hpp"
#include "ehrlimit/fpp.hpp"

using namespace ehrlimit;

TEST_CASE("f_kh examples") {
    CHECK(f_kh(2, 2) == 2);
    CHECK(f_kh(4, 3) == 8);
    CHECK(f_kh(6, 2) == 0);
    CHECK(f_kh(3, 2) == 2);
    CHECK(f_kh(3, 3) == 2);
    CHECK_THROWS_AS(f_kh(0, 1), std::invalid_argument);
}

TEST_CASE("m = 2 limit coefficients match the series") {
    const long expected[] = {1, 1, 4, 20, 84, 356, 1508, 6388, 27060, 114628, 485572};
    for (long j = 0; j <= 10; ++j) CHECK(thm_m2_coefficient(j) == expected[j]);
}

TEST_CASE("coefficients grouped by h sum the same f-values either way") {
    for (long h = 2; h <= 40; ++h) {
        Int acc = 0;
        for (long k = (3 * (h - 1) + 1) / 2; k <= 3 * h - 3; ++k) acc += f_kh(k, h);
        CHECK(acc == thm_m2_coefficient(h));
    }
}

TEST_CASE("lemma sums are powers of two for k >= 2; k = 1 degenerates") {
    CHECK(lemma_sum(3) == 4);
    CHECK(lemma_sum(20) == 524288);
    for (long k = 2; k <= 40; ++k) CHECK(lemma_sum(k) == int_pow(2, k - 1));

    // The k = 1 summation range [ceil(4/3), floor(5/3)] is empty, so the
    // literal sum is 0, not 2^0: the lone lambda_2 = 1/2 point pairs with
    // itself and no f-value accounts for it. The census still counts it.
    CHECK(lemma_sum(1) == 0);
    auto census = bidiagonal_census(2, 3);
    REQUIRE(census.size() == 1);
    CHECK(census[{1, 1}] == 1);
}

TEST_CASE("jacobsthal numerators") {
    auto nums = jacobsthal_lambda_numerators(22);
    REQUIRE(nums.size() == 22);
    CHECK(nums[0] == 1);
    CHECK(nums[1] == 1);
    CHECK(nums[2] == 3);
    CHECK(nums[3] == 5);
    CHECK(nums[4] == 11);
    for (size_t t = 2; t < nums.size(); ++t) CHECK(nums[t] == nums[t - 1] + 2 * nums[t - 2]);

    auto lams = jacobsthal_base_lambda(6);
    CHECK(lams[0] == Rat(1, 2));   // j = -1
    CHECK(lams[1] == Rat(1, 4));   // j = 0
    CHECK(lams[2] == Rat(3, 8));   // j = 1
    CHECK(lams[3] == Rat(5, 16));
}

TEST_CASE("linear recursion h_i = 4 h_{i-1} + h_{i-2}") {
    CHECK(recursion_check(6));
    CHECK(recursion_check(10));
    CHECK(recursion_check(40));
    CHECK(thm_m2_coefficient(6) == 4 * 356 + 84);
    CHECK(thm_m2_coefficient(10) == 4 * 114628 + 27060);
    CHECK_THROWS_AS(recursion_check(3), std::invalid_argument);
}

TEST_CASE("q(n) closed form") {
    CHECK(q_of_n_hstar(2) == IntPolynomial{1, 7, 15, 14, 15, 7, 1});
    CHECK(q_of_n_hstar(3) == IntPolynomial{1, 7, 15, 14, 16, 14, 15, 7, 1});
    CHECK_THROWS_AS(q_of_n_hstar(1), std::invalid_argument);

    // Sum equals the normalized volume 30n.
    for (long n = 2; n <= 10; ++n) {
        CHECK(q_of_n_hstar(n).sum() == 30 * n);
        CHECK(make_q_of_n(n).normalized_volume() == 30 * n);
    }

    // The large-n prefix through z^8.
    IntPolynomial big = q_of_n_hstar(6);
    const long prefix[] = {1, 7, 15, 14, 16, 14, 16, 14, 16};
    for (long i = 0; i <= 8; ++i) CHECK(big.at(i) == prefix[i]);
}

TEST_CASE("closed form cross-validates against enumeration") {
    // Coefficient j of h*(P_{2,d}) is stable once d - 2 >= 3j - 3.
    for (long j = 1; j <= 5; ++j) {
        IntPolynomial h = hstar(make_bidiagonal(2, 3 * j));
        CHECK(h.at(j) == thm_m2_coefficient(j));
    }
}
