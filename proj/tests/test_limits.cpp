#include <doctest.h>

#include "ehrlimit/combinators.hpp"
#include "ehrlimit/limits.hpp"

using namespace ehrlimit;

namespace {

std::vector<Int> coeff_list(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

bool all_tagged(const SeriesPrefix& p, Stability s) {
    for (Stability t : p.tags)
        if (t != s) return false;
    return true;
}

}  // namespace

TEST_CASE("certified_dimension") {
    CHECK(certified_dimension_bidiagonal(2, 2) == 11);
    CHECK(certified_dimension_bidiagonal(2, 0) == 3);
    CHECK(certified_dimension_bidiagonal(2, 5) == 23);
    CHECK(certified_dimension({3, 2}, 1) == 8);
    CHECK(certified_dimension({4, 3, 2}, 1) == 15);
    CHECK_THROWS_AS(certified_dimension({4, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(certified_dimension(FamilySpec::S(), 1), std::invalid_argument);
}

TEST_CASE("limit_prefix_certified: bidiagonal") {
    auto r3 = limit_prefix_certified(FamilySpec::bidiag(2), 3);
    CHECK(r3.prefix.coeffs == coeff_list({1, 1, 4, 20}));
    CHECK(all_tagged(r3.prefix, Stability::certified));
    CHECK(r3.dimensions == std::vector<long>{15});
    CHECK(r3.window == 0);

    auto r5 = limit_prefix_certified(FamilySpec::bidiag(2), 5);
    CHECK(r5.prefix.coeffs == coeff_list({1, 1, 4, 20, 84, 356}));
    CHECK(r5.dimensions == std::vector<long>{23});
}

TEST_CASE("limit_prefix_certified: multidiagonal evaluates the certificate and two spot checks") {
    auto rep = limit_prefix_certified(FamilySpec::multidiag({3, 2}), 1);
    CHECK(rep.prefix.coeffs == coeff_list({1, 2}));
    CHECK(all_tagged(rep.prefix, Stability::certified));
    CHECK(rep.dimensions == std::vector<long>{8, 9, 10});
}

TEST_CASE("certified coefficients persist above the certificate dimension") {
    for (long r = 0; r <= 2; ++r) {
        long dc = certified_dimension_bidiagonal(2, r);
        IntPolynomial base = family_member_hstar(FamilySpec::bidiag(2), dc);
        for (long d = dc + 1; d <= dc + 2; ++d) {
            IntPolynomial higher = family_member_hstar(FamilySpec::bidiag(2), d);
            for (long i = 0; i <= r; ++i) CHECK(base.at(i) == higher.at(i));
        }
    }
}

TEST_CASE("certified requests beyond the budget fail loudly") {
    CHECK_THROWS_AS(limit_prefix_certified(FamilySpec::bidiag(2), 6), BudgetError);
    // m = 3, r = 3 would need dimension 21, determinant 3^19.
    try {
        limit_prefix_certified(FamilySpec::bidiag(3), 3);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.required_determinant == int_pow(3, 19));
    }

    // Multidiagonal (4,3,2): r = 0 certifies at D = 3 with cheap spot checks;
    // r = 1 needs D = 15, determinant 4^13, beyond the default budget.
    auto r0 = limit_prefix_certified(FamilySpec::multidiag({4, 3, 2}), 0);
    CHECK(r0.prefix.coeffs == coeff_list({1}));
    CHECK(r0.dimensions == std::vector<long>{3, 4, 5});
    try {
        limit_prefix_certified(FamilySpec::multidiag({4, 3, 2}), 1);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.required_determinant == int_pow(4, 13));
    }
}

TEST_CASE("certified and empirical prefixes agree where both complete") {
    struct Case {
        FamilySpec fam;
        long r;
    };
    for (const auto& [fam, r] : {Case{FamilySpec::bidiag(2), 5}, Case{FamilySpec::bidiag(3), 2}}) {
        auto cert = limit_prefix_certified(fam, r);
        auto emp = stabilize_empirical(fam, r, 3, 24);
        REQUIRE(emp.stabilized);
        CHECK(prefix_agree(cert.prefix, emp.prefix, r));
    }
}

TEST_CASE("stabilize_empirical: bidiagonal m = 2") {
    auto rep = stabilize_empirical(FamilySpec::bidiag(2), 5, 3, 32);
    REQUIRE(rep.stabilized);
    CHECK(rep.prefix.coeffs == coeff_list({1, 1, 4, 20, 84, 356}));
    CHECK(all_tagged(rep.prefix, Stability::empirical));
    CHECK(rep.dimensions.back() == 16);
    CHECK(rep.window == 3);
}

TEST_CASE("stabilize_empirical: q(n) family") {
    auto rep = stabilize_empirical(FamilySpec::qn(), 8, 2, 20);
    REQUIRE(rep.stabilized);
    CHECK(rep.prefix.coeffs == coeff_list({1, 7, 15, 14, 16, 14, 16, 14, 16}));
    CHECK(rep.dimensions.back() == 6);
}

TEST_CASE("stabilize_empirical: crosspolytope linear coefficients never settle") {
    auto rep = stabilize_empirical(FamilySpec::cross(), 1, 3, 10);
    CHECK_FALSE(rep.stabilized);
    CHECK(rep.unstable == std::vector<long>{1});
    CHECK(rep.dimensions.size() == 10);
}

TEST_CASE("stabilize_empirical rejects schedule-free families and bad windows") {
    CHECK_THROWS_AS(stabilize_empirical(FamilySpec::delta({2, 2}), 2, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(stabilize_empirical(FamilySpec::qn(), 2, 1, 10), std::invalid_argument);
}

TEST_CASE("free_sum_limit_prefix") {
    auto a = free_sum_limit_prefix(IntPolynomial{1, 1}, 1, 4);
    CHECK(a.coeffs == coeff_list({1, 2, 2, 2, 2}));
    CHECK(all_tagged(a, Stability::exact));

    auto b = free_sum_limit_prefix(IntPolynomial{1}, 2, 3);
    CHECK(b.coeffs == coeff_list({1, 2, 3, 4}));

    CHECK_THROWS_AS(free_sum_limit_prefix(IntPolynomial{2, 1}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(free_sum_limit_prefix(IntPolynomial{1, 1}, 0, 3), std::invalid_argument);
}

TEST_CASE("free_sum_limit_prefix agrees with the finite free-sum products") {
    // h*(Q (+) (S_d)^(+k)) = h*(Q) (1 + .. + z^d)^k matches through degree d.
    const IntPolynomial q{1, 1};
    const long r = 5, k = 2, d = 5;
    auto limit = free_sum_limit_prefix(q, k, r);
    std::vector<Int> ones(d + 1, Int(1));
    IntPolynomial sd(std::move(ones));
    IntPolynomial finite = poly_mul(q, poly_mul(sd, sd));
    for (long i = 0; i <= r; ++i) CHECK(limit.coeffs[i] == finite.at(i));
}

TEST_CASE("join multiplicativity at the limit level") {
    // The joined family join(P_{2,d}, Delta_(1,q(d))) stabilizes to the
    // product of the two family limits.
    const long r = 3;
    auto left = stabilize_empirical(FamilySpec::bidiag(2), r, 3, 20);
    auto right = stabilize_empirical(FamilySpec::qn(), r, 3, 20);
    REQUIRE(left.stabilized);
    REQUIRE(right.stabilized);

    auto joint = stabilize_sequence(
        FamilySpec::bidiag(2),
        [&](long d) {
            auto p = join(VertexPolytope::leaf(make_bidiagonal(2, d)),
                          VertexPolytope::leaf(make_q_of_n(d)));
            return hstar(p);
        },
        3, r, 3, 20);
    REQUIRE(joint.stabilized);

    IntPolynomial prod =
        poly_mul(IntPolynomial(left.prefix.coeffs), IntPolynomial(right.prefix.coeffs));
    for (long i = 0; i <= r; ++i) CHECK(joint.prefix.coeffs[i] == prod.at(i));
}

TEST_CASE("limit report serialization round-trips") {
    auto rep = limit_prefix_certified(FamilySpec::multidiag({3, 2}), 1);
    auto j = limit_report_json(rep);
    CHECK(j["family"]["kind"] == "multidiagonal");
    CHECK(j["prefix"] == nlohmann::ordered_json::array({1, 2}));
    CHECK(j["modes"][0] == "certified");
    std::string text = j.dump();
    CHECK(nlohmann::ordered_json::parse(text).dump() == text);
}
