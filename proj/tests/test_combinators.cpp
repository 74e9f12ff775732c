#include <doctest.h>

#include <algorithm>

#include "ehrlimit/combinators.hpp"
#include "ehrlimit/oracle.hpp"

using namespace ehrlimit;

namespace {

VertexPolytope leaf_S(long d) { return VertexPolytope::leaf(make_S(d)); }

IntMatrix identity_cols(int d) {
    IntMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace

TEST_CASE("free_sum of S_1 with itself is the square") {
    auto sq = free_sum(leaf_S(1), leaf_S(1));
    CHECK(sq.dim() == 2);
    std::vector<std::vector<Int>> expect = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    CHECK(sq.vertices() == expect);
    CHECK(hstar(sq) == IntPolynomial{1, 2, 1});
    CHECK(is_reflexive(sq));
}

TEST_CASE("free_sum h* multiplies when the left side is reflexive") {
    auto fs = free_sum(leaf_S(2), leaf_S(1));
    CHECK(fs.dim() == 3);
    CHECK(hstar(fs) == poly_mul(IntPolynomial{1, 1, 1}, IntPolynomial{1, 1}));
}

TEST_CASE("free_sum rejects polytopes without interior origin") {
    auto unit = VertexPolytope::leaf(from_columns(identity_cols(2)));
    CHECK_FALSE(origin_interior(unit));
    CHECK_THROWS_AS(free_sum(unit, leaf_S(1)), std::invalid_argument);
}

TEST_CASE("free_sum with a non-reflexive left argument refuses h*") {
    // Delta_(1,(2,2)) has the origin interior but is not reflexive.
    auto left = VertexPolytope::leaf(make_delta_one_q({Int(2), Int(2)}));
    CHECK(origin_interior(left));
    CHECK_FALSE(is_reflexive(left));
    auto fs = free_sum(left, leaf_S(1));
    CHECK_FALSE(fs.left_reflexive());
    CHECK_THROWS_AS(hstar(fs), std::domain_error);
}

TEST_CASE("join") {
    auto j = join(leaf_S(1), leaf_S(1));
    CHECK(j.ambient_dim() == 3);
    CHECK(j.dim() == 3);
    CHECK(j.vertices().size() == 4);  // a 3-simplex
    CHECK(hstar(j) == IntPolynomial{1, 2, 1});

    // Embedding follows the defining formula, final coordinate 0 or 1.
    for (const auto& v : j.vertices()) CHECK((v.back() == 0 || v.back() == 1));

    // Join with a point leaves h* unchanged.
    auto point = VertexPolytope::leaf(LatticeSimplex(0, {{}}));
    CHECK(hstar(join(leaf_S(2), point)) == IntPolynomial{1, 1, 1});

    // Normalized volume multiplies: h*(1) is multiplicative.
    auto jj = join(VertexPolytope::leaf(make_bidiagonal(2, 4)), leaf_S(2));
    CHECK(hstar(jj).sum() == 4 * 3);
    CHECK_FALSE(origin_interior(jj));
    CHECK_FALSE(is_reflexive(jj));
}

TEST_CASE("pyramid") {
    auto unit3 = VertexPolytope::leaf(from_columns(identity_cols(3)));
    auto pyr = pyramid(unit3);
    CHECK(pyr.dim() == 4);
    CHECK(hstar(pyr) == IntPolynomial{1});

    VertexPolytope p = leaf_S(2);
    for (int k = 0; k < 3; ++k) {
        p = pyramid(p);
        CHECK(hstar(p) == IntPolynomial{1, 1, 1});
    }
    CHECK_FALSE(origin_interior(p));
}

TEST_CASE("pyramid over a parallelepiped-enumerated simplex") {
    auto base = make_bidiagonal(2, 4);
    auto pyr = pyramid(VertexPolytope::leaf(base));
    IntPolynomial h = hstar(pyr);
    CHECK(h == hstar(base));
    // Independent confirmation by dilate counting.
    auto counted = ehrhart_prefix_by_counting(pyr, 3);
    CHECK(prefix_agree(counted, expand_rational_prefix(h, pyr.dim() + 1, 3), 3));
}

TEST_CASE("crosspolytope family") {
    auto x3 = make_crosspolytope(3);
    CHECK(x3.dim() == 3);
    CHECK(x3.vertices().size() == 6);
    CHECK(hstar(x3) == IntPolynomial{1, 3, 3, 1});
    CHECK(is_reflexive(x3));
    CHECK(origin_interior(x3));
    CHECK(hstar(make_crosspolytope(5)).at(1) == 5);
}
