#include <catch2/catch_amalgamated.hpp>

#include "convtile/counting.hpp"
#include "helpers.hpp"

using namespace convtile;
using convtile::testing::by_profile;

TEST_CASE("curvature factors", "[counting]") {
    // mu = 4 at k = 6: (1/3)^3 / 4! = 1/648
    CHECK(curvature_factor(4, 6) == Rat(1, 648));
    // mu = 5 at k = 6: (1/6)^4 / 5! = 1/155520
    CHECK(curvature_factor(5, 6) == Rat(1, 155520));
    // mu = 1 anywhere: 1
    CHECK(curvature_factor(1, 6) == 1);
    CHECK(curvature_factor(1, 4) == 1);
}

TEST_CASE("golden weights", "[counting]") {
    CHECK(weight(by_profile(generate(3, 2), {4, 4, 4})) ==
          Rat(1, 6) * Rat(1, 648) * Rat(1, 648) * Rat(1, 648));
    CHECK(weight(by_profile(generate(6, 1), {2, 2, 2})) == Rat(1, 648));
    CHECK(weight(by_profile(generate(4, 2), {2, 2, 2, 2})) == Rat(1, 2048));
}

TEST_CASE("stabilizer orders", "[counting]") {
    // 1-square tiling: |Stab| = 2^13 * 3^2
    CHECK(stab_order(by_profile(generate(4, 1), {3, 3, 2})) == 73728);
    for (auto [gon, n] : std::vector<std::pair<int, int>>{{3, 6}, {4, 3}, {6, 3}})
        for (const Tiling& t : generate(gon, n))
            CHECK(stab_order(t) * weight(t) == 1);
}

TEST_CASE("weighted counts at small sizes", "[counting]") {
    // 1/(2*3*155520^2) + 1/(6*648^3) = 809/(2^15 3^13 5^2)
    Rat expected_a = Rat(809) / (Rat(Int(1) << 15) * Rat(Int("1594323")) * 25);
    CHECK(weighted_count(generate(3, 2)) == expected_a);
    CHECK(Rat(1, 2 * 3) / (Rat(155520) * 155520) + Rat(1, 6) / (Rat(648) * 648 * 648) ==
          expected_a);

    CHECK(weighted_count(generate(4, 2)) == Rat(41, 73728));
    CHECK(Rat(1, 73728) + Rat(1, 18432) + Rat(1, 2048) == Rat(41, 73728));

    CHECK(weighted_count(generate(6, 2)) == Rat(1, 72));
}

TEST_CASE("unoriented counts are exactly half", "[counting]") {
    for (auto [gon, n_max] : std::vector<std::pair<int, int>>{{3, 8}, {4, 5}, {6, 4}}) {
        for (int n = 1; n <= n_max; ++n) {
            std::vector<Tiling> tilings = generate(gon, n);
            CHECK(2 * unoriented_weighted_count(tilings) == weighted_count(tilings));
        }
    }
}

TEST_CASE("profile histogram", "[counting]") {
    auto h = profile_histogram(generate(3, 4));
    CHECK(h.size() == 4);
    CHECK(h.at("(3,3,3,3)") == 1);
    CHECK(h.at("(5,4,3)") == 1);
}
