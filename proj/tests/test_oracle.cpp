#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "igusa/oracle.hpp"

using namespace igusa;

namespace {
IVec iv(std::vector<long> v) {
    IVec r;
    for (long x : v) r.push_back(Int(x));
    return r;
}
}

TEST_CASE("brute parallelepiped golden and unit cases") {
    auto pts = oracle::brute_parallelepiped({iv({2, 4, 3}), iv({0, 1, 0}), iv({0, 0, 1})}, false);
    std::set<std::vector<Int>> got(pts.begin(), pts.end());
    CHECK(got == std::set<std::vector<Int>>{iv({0, 0, 0}), iv({1, 2, 2})});

    auto low = oracle::brute_parallelepiped({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, false);
    REQUIRE(low.size() == 1);
    CHECK(low[0] == iv({0, 0, 0}));
    auto high = oracle::brute_parallelepiped({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, true);
    REQUIRE(high.size() == 1);
    CHECK(high[0] == iv({1, 1, 1}));

    CHECK_THROWS_AS(oracle::brute_parallelepiped({iv({1, 2, 3}), iv({2, 4, 6})}, false),
                    std::invalid_argument);
}

TEST_CASE("open-cone membership") {
    std::vector<IVec> cone{iv({1, 0, 0}), iv({1, 1, 0})};
    CHECK(oracle::in_open_simplicial_cone(cone, iv({2, 1, 0})));
    CHECK_FALSE(oracle::in_open_simplicial_cone(cone, iv({1, 0, 0})));   // boundary ray
    CHECK_FALSE(oracle::in_open_simplicial_cone(cone, iv({0, 1, 0})));   // outside
    CHECK_FALSE(oracle::in_open_simplicial_cone(cone, iv({2, 1, 1})));   // off the span
}

TEST_CASE("relative interior membership") {
    std::vector<IVec> gens{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0})};
    CHECK(oracle::in_relative_interior(gens, iv({1, 1, 0})));
    CHECK(oracle::in_relative_interior(gens, iv({3, 1, 0})));
    CHECK_FALSE(oracle::in_relative_interior(gens, iv({1, 0, 0})));
    CHECK_FALSE(oracle::in_relative_interior(gens, iv({1, 1, 1})));
}

TEST_CASE("partition check accepts a valid split and rejects a double cover") {
    std::vector<std::vector<IVec>> pieces{
        {iv({1, 0, 0}), iv({1, 1, 0})}, {iv({1, 1, 0})}, {iv({1, 1, 0}), iv({0, 1, 0})}};
    CHECK(oracle::brute_cone_partition_check(pieces, 6));
    CHECK(oracle::brute_cone_partition_check({{iv({1, 0, 0})}}, 6));
    auto duplicated = pieces;
    duplicated.push_back(pieces[0]);
    CHECK_FALSE(oracle::brute_cone_partition_check(duplicated, 6));
}

TEST_CASE("series coefficients: single monomial") {
    auto f = parse_polynomial("z", 3);
    auto coeffs = oracle::series_coefficients_padic(f, 3, 2);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0] == Rat(2, 81));  // 18 classes mod 9 out of 3^6
    // l = 2: z = 3c with c in Z/9 and 3c of order exactly 2: c in {3, 6}
    CHECK(coeffs[1] == Rat(81 * 2, 19683));
}

TEST_CASE("series coefficients: two variables") {
    auto f = parse_polynomial("x", 2);
    auto coeffs = oracle::series_coefficients_padic(f, 3, 3);
    // l=1: x = 3a with a nonzero mod 3, y free: 2 * 3 classes out of 3^4
    CHECK(coeffs[0] == Rat(6, 81));
}

TEST_CASE("series budget is enforced") {
    auto f = parse_polynomial("x+y+z", 3);
    CHECK_THROWS_AS(oracle::series_coefficients_padic(f, 101, 4), std::invalid_argument);
}
