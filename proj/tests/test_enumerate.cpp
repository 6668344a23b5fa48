#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "convtile/enumerate.hpp"
#include "helpers.hpp"

using namespace convtile;
using convtile::testing::code_set;

TEST_CASE("golden small counts", "[enumerate]") {
    CHECK(brute_force(3, 2).size() == 2);
    CHECK(brute_force(4, 1).size() == 1);
    CHECK(brute_force(6, 2).size() == 1);
    CHECK(generate(3, 4).size() == 4);
    CHECK(generate(4, 2).size() == 3);
    CHECK(generate(6, 1).size() == 1);
}

TEST_CASE("golden small profiles", "[enumerate]") {
    std::multiset<CurvatureProfile> tri2;
    for (const Tiling& t : brute_force(3, 2)) tri2.insert(curvature_profile(t));
    CHECK(tri2 == std::multiset<CurvatureProfile>{{5, 5, 2}, {4, 4, 4}});

    std::vector<Tiling> sq1 = brute_force(4, 1);
    REQUIRE(sq1.size() == 1);
    CHECK(curvature_profile(sq1[0]) == CurvatureProfile{3, 3, 2});

    std::vector<Tiling> hex2 = brute_force(6, 2);
    REQUIRE(hex2.size() == 1);
    CHECK(curvature_profile(hex2[0]) == CurvatureProfile{2, 2, 1, 1});

    std::multiset<CurvatureProfile> tri4;
    for (const Tiling& t : generate(3, 4)) tri4.insert(curvature_profile(t));
    CHECK(tri4 == std::multiset<CurvatureProfile>{
                      {5, 4, 3}, {3, 3, 3, 3}, {5, 5, 1, 1}, {4, 4, 2, 2}});
}

TEST_CASE("oracle bound is enforced", "[enumerate]") {
    CHECK_THROWS_AS(brute_force(3, 7), UsageError);   // 21 darts: odd anyway
    CHECK_THROWS_AS(brute_force(4, 5), UsageError);   // 20 > 18
    CHECK_THROWS_AS(brute_force(6, 4), UsageError);   // 24 > 18
    CHECK_THROWS_AS(generate(3, 13), UsageError);     // budget 12
    CHECK_THROWS_AS(generate(4, 9), UsageError);      // budget 8
    CHECK_THROWS_AS(generate(6, 7), UsageError);      // budget 6
}

TEST_CASE("odd dart totals enumerate to nothing", "[enumerate]") {
    CHECK(brute_force(3, 1).empty());
    CHECK(brute_force(3, 3).empty());
    CHECK(generate(3, 5).empty());
}

TEST_CASE("generator agrees with the oracle", "[enumerate][oracle]") {
    for (int gon : {3, 4, 6}) {
        for (int n = 1; n * gon <= 18; ++n) {
            INFO("gon=" << gon << " n=" << n);
            CHECK(code_set(generate(gon, n)) == code_set(brute_force(gon, n)));
        }
    }
}

TEST_CASE("threaded generation matches sequential", "[enumerate]") {
    CHECK(code_set(generate(3, 8, -1, 4)) == code_set(generate(3, 8)));
    CHECK(code_set(generate(6, 4, -1, 4)) == code_set(generate(6, 4)));
}

TEST_CASE("structural invariants of generated tilings", "[enumerate][property]") {
    for (auto [gon, n_max] : std::vector<std::pair<int, int>>{{3, 8}, {4, 5}, {6, 4}}) {
        int k = curvature_index(gon);
        for (int n = 1; n <= n_max; ++n) {
            for (const Tiling& t : generate(gon, n)) {
                CHECK(validate(t).empty());
                CHECK(t.map.n_darts == gon * n);
                int total = 0;
                for (int mu : curvature_profile(t)) total += mu;
                CHECK(total == 2 * k);
                CHECK(t.map.n_darts % aut_order(t) == 0);
                if (gon == 6) {
                    // black vertices n+2, white vertices n
                    std::vector<int> orbit, size;
                    int nv = detail::permutation_orbits(t.map.sigma, orbit, size);
                    std::map<int, int> color_of;  // vertex -> color
                    for (int d = 0; d < t.map.n_darts; ++d) color_of[orbit[d]] = t.colors[d];
                    int black = 0, white = 0;
                    for (int v = 0; v < nv; ++v) (color_of[v] == 0 ? black : white)++;
                    CHECK(black == n + 2);
                    CHECK(white == n);
                }
            }
        }
    }
}

TEST_CASE("tilings are pairwise distinct", "[enumerate]") {
    for (auto [gon, n] : std::vector<std::pair<int, int>>{{3, 8}, {4, 4}, {6, 4}}) {
        std::vector<std::string> codes = code_set(generate(gon, n));
        std::set<std::string> uniq(codes.begin(), codes.end());
        CHECK(uniq.size() == codes.size());
    }
}
