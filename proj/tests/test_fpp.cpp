#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "ehrlimit/fpp.hpp"

using namespace ehrlimit;

namespace {

std::vector<FppPoint> collect(const LatticeSimplex& p) {
    std::vector<FppPoint> pts;
    enumerate_fpp(p, [&](const FppPoint& pt) { pts.push_back(pt); });
    return pts;
}

std::string lambda_key(const FppPoint& pt) {
    std::ostringstream os;
    for (const Rat& l : pt.lambda) os << l << ";";
    return os.str();
}

std::vector<std::string> sorted_keys(const std::vector<FppPoint>& pts) {
    std::vector<std::string> keys;
    keys.reserve(pts.size());
    for (const auto& pt : pts) keys.push_back(lambda_key(pt));
    std::sort(keys.begin(), keys.end());
    return keys;
}

IntMatrix identity_cols(int d) {
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    long next(long bound) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((s >> 33) % bound);
    }
};

}  // namespace

TEST_CASE("enumerate_fpp on the unit simplex") {
    auto pts = collect(from_columns(identity_cols(3)));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].height == 0);
    for (const Rat& l : pts[0].lambda) CHECK(l == 0);
}

TEST_CASE("enumerate_fpp on bidiagonal and cyclic forms") {
    auto pts = collect(make_bidiagonal(2, 4));
    CHECK(pts.size() == 4);
    // Zero point first, per the fixed stream order.
    CHECK(pts[0].height == 0);
    std::vector<long> heights;
    for (const auto& pt : pts) heights.push_back(pt.height);
    std::sort(heights.begin(), heights.end());
    CHECK(heights == std::vector<long>{0, 1, 2, 2});

    auto s2 = collect(make_S(2));
    REQUIRE(s2.size() == 3);
    CHECK(s2[0].height == 0);
    CHECK(s2[1].height == 1);
    CHECK(s2[2].height == 2);

    // B lambda = point holds exactly for every streamed point.
    for (const auto& pt : collect(make_q_of_n(2))) {
        CHECK(pt.lambda.size() == 7);
        CHECK(pt.point.size() == 7);
        CHECK(pt.point[0] == pt.height);
    }
}

TEST_CASE("enumerate_fpp rejects generic non-HNF input") {
    // S_2 rebuilt through from_columns loses the cyclic tag and is not HNF.
    IntMatrix cols(2, 3);
    cols.at(0, 0) = 1;
    cols.at(1, 1) = 1;
    cols.at(0, 2) = -1;
    cols.at(1, 2) = -1;
    auto generic = from_columns(cols);
    CHECK_THROWS_AS(collect(generic), UnsupportedFormError);
    CHECK_THROWS_AS(hstar(generic), UnsupportedFormError);
}

TEST_CASE("hstar examples") {
    CHECK(hstar(make_S(5)) == IntPolynomial{1, 1, 1, 1, 1, 1});
    CHECK(hstar(make_q_of_n(2)) == IntPolynomial{1, 7, 15, 14, 15, 7, 1});
    IntPolynomial p214 = hstar(make_bidiagonal(2, 14));
    CHECK(p214 == IntPolynomial{1, 1, 4, 20, 84, 356, 1346, 1912, 370, 2});
    CHECK(p214.sum() == 4096);
}

TEST_CASE("kernel agrees with the serial reference") {
    std::vector<LatticeSimplex> cases;
    for (long d = 3; d <= 10; ++d) cases.push_back(make_bidiagonal(2, d));
    for (long d = 3; d <= 8; ++d) cases.push_back(make_bidiagonal(3, d));
    for (long d = 2; d <= 7; ++d) cases.push_back(make_multidiagonal({3, 2}, d));
    for (long d = 3; d <= 6; ++d) cases.push_back(make_multidiagonal({4, 3, 2}, d));
    for (const auto& p : cases) {
        IntPolynomial ref = hstar_reference(p);
        CHECK(ref == hstar(p, {HstarOptions::default_budget(), 1}));
        CHECK(ref == hstar(p, {HstarOptions::default_budget(), 3}));
        CHECK(ref.sum() == p.normalized_volume());
        CHECK(ref.at(0) == 1);
    }
}

TEST_CASE("wide-arithmetic kernel path matches the machine-word path") {
    HstarOptions wide;
    wide.wide_arithmetic = true;
    for (const auto& p : {make_bidiagonal(2, 12), make_bidiagonal(3, 8),
                          make_multidiagonal({4, 3, 2}, 7)}) {
        CHECK(hstar(p, wide) == hstar(p));
    }
}

TEST_CASE("kernel agrees with the reference on random HNF simplices") {
    Lcg rng(2024);
    for (int it = 0; it < 60; ++it) {
        int d = 2 + static_cast<int>(rng.next(4));
        IntMatrix cols(d, d);
        for (int j = 0; j < d; ++j) {
            long diag = 1 + rng.next(4);
            cols.at(j, j) = diag;
            for (int i = 0; i < j; ++i) cols.at(i, j) = rng.next(diag);
        }
        auto p = from_columns(cols);
        REQUIRE(p.hnf_flag());
        IntPolynomial ref = hstar_reference(p);
        CHECK(ref == hstar(p));
        CHECK(ref.sum() == p.normalized_volume());
    }
}

TEST_CASE("family volumes equal the coefficient sums") {
    Lcg rng(99);
    for (int it = 0; it < 20; ++it) {
        std::vector<Int> q(1 + rng.next(5));
        for (auto& qi : q) qi = 1 + rng.next(12);
        auto p = make_delta_one_q(q);
        IntPolynomial h = hstar(p);
        CHECK(h.sum() == p.normalized_volume());
        CHECK(h.at(0) == 1);
    }
}

TEST_CASE("budget is enforced and names the required determinant") {
    CHECK_THROWS_AS(hstar(make_bidiagonal(2, 30)), BudgetError);
    try {
        hstar(make_bidiagonal(2, 30));
    } catch (const BudgetError& e) {
        CHECK(e.required_determinant == Int(1) << 28);
        CHECK(std::string(e.what()).find("268435456") != std::string::npos);
    }
}

TEST_CASE("decode_bidiagonal chain structure") {
    for (long k = 1; k <= 6; ++k) {
        for (long b = 1; b < (1 << k); b += 2) {
            auto lam = decode_bidiagonal(2, {k, Int(b)}, 10);
            CHECK(lam[1] + lam[2] == 1);
            CHECK(lam[k + 1] == Rat(1, 2));  // last chain entry at m = 2
            for (size_t t = k + 2; t < lam.size(); ++t) CHECK(lam[t] == 0);
        }
    }
    CHECK_THROWS_AS(decode_bidiagonal(2, {2, Int(2)}, 8), std::invalid_argument);
    CHECK_THROWS_AS(decode_bidiagonal(2, {7, Int(1)}, 8), std::invalid_argument);
}

TEST_CASE("enumerate_bidiagonal matches enumerate_fpp as a multiset") {
    for (long m : {2L, 3L}) {
        for (long d = 3; d <= 8; ++d) {
            std::vector<FppPoint> chain;
            enumerate_bidiagonal(m, d, [&](const FppPoint& pt) { chain.push_back(pt); });
            CHECK(chain[0].height == 0);
            auto generic = collect(make_bidiagonal(m, d));
            REQUIRE(chain.size() == generic.size());
            CHECK(sorted_keys(chain) == sorted_keys(generic));
        }
    }
    long count = 0;
    enumerate_bidiagonal(3, 6, [&](const FppPoint&) { ++count; });
    CHECK(count == 81);
}

TEST_CASE("bidiagonal height bound on emitted codes") {
    for (long m : {2L, 3L})
        for (long d = 3; d <= 9; ++d) CHECK(check_bidiagonal_height_bound(m, d));

    // Direct form on the specialized stream: height >= ceil(floor(k/2)/m).
    enumerate_bidiagonal(2, 9, [&](const FppPoint& pt) {
        if (pt.height == 0) return;
        long k = bidiagonal_code_k(2, pt.lambda[2]);
        CHECK(pt.height >= (k / 2 + 1) / 2);
    });
}

TEST_CASE("multidiagonal height bound") {
    CHECK(check_multidiagonal_height_bound(make_multidiagonal({3, 2}, 5)));
    CHECK(check_multidiagonal_height_bound(make_multidiagonal({2, 1}, 6)));
    CHECK(check_multidiagonal_height_bound(make_multidiagonal({4, 3, 2}, 6)));
    CHECK_THROWS_AS(check_multidiagonal_height_bound(make_multidiagonal({4, 2}, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_multidiagonal_height_bound(make_multidiagonal({5}, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_multidiagonal_height_bound(make_S(3)), std::invalid_argument);
}

TEST_CASE("bidiagonal census spot values") {
    auto census = bidiagonal_census(2, 8);
    CHECK(census[{1, 1}] == 1);
    CHECK(census[{2, 2}] == 2);
    CHECK(census[{3, 2}] == 2);
    CHECK(census[{3, 3}] == 2);
    CHECK(census[{4, 3}] == 8);
    Int total = 1;  // zero point
    for (const auto& [kh, c] : census) total += c;
    CHECK(total == 64);
}
