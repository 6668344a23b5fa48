#include <catch2/catch_amalgamated.hpp>

#include "convtile/counting.hpp"
#include "convtile/modforms.hpp"

using namespace convtile;

TEST_CASE("divisor power sums", "[modforms]") {
    CHECK(sigma_div(9, Rat(2)) == 513);            // 1 + 2^9
    CHECK(sigma_div(5, Rat(3, 2)) == 0);           // non-integer argument
    CHECK(sigma_div(3, Rat(1)) == 1);
    CHECK(sigma_div(3, Rat(6)) == 1 + 8 + 27 + 216);
    CHECK(sigma_div(5, Rat(0)) == 0);
    CHECK(sigma_div(5, Rat(-2)) == 0);
    CHECK(sigma_div(9, Rat(4, 2)) == 513);         // non-canonical input
    CHECK_THROWS(sigma_div(0, Rat(1)));
}

TEST_CASE("eisenstein series coefficients", "[modforms]") {
    QSeries e10 = eisenstein(10, 1, 3);
    CHECK(e10.coeffs == std::vector<Rat>{Rat(-1, 264), 1, 513, 19684});

    QSeries e6 = eisenstein(6, 2, 4);
    CHECK(e6.coeffs == std::vector<Rat>{Rat(-1, 504), 0, 1, 0, 33});

    QSeries e4 = eisenstein(4, 3, 3);
    CHECK(e4.coeffs == std::vector<Rat>{Rat(1, 240), 0, 0, 1});
}

TEST_CASE("series arithmetic respects truncation", "[modforms]") {
    QSeries a = eisenstein(4, 1, 6);
    QSeries b = a.scaled(Rat(3, 7));
    for (int i = 0; i <= 6; ++i) CHECK(b.at(i) == a.at(i) * Rat(3, 7));
    QSeries c = a.upsampled(2, 6);
    CHECK(c.order() == 6);
    CHECK(c.at(2) == a.at(1));
    CHECK(c.at(3) == 0);
    QSeries d = a;
    d += b;
    CHECK(d.at(5) == a.at(5) + b.at(5));
}

TEST_CASE("closed-form counts", "[modforms]") {
    // 4 triangles: 809 * 513 / (2^15 3^13 5^2)
    Rat a = Rat(809) / (Rat(Int(1) << 15) * Rat(Int("1594323")) * 25);
    CHECK(closed_form_count(3, 4) == a * 513);
    CHECK(closed_form_count(4, 1) == Rat(1, 73728));
    CHECK(closed_form_count(6, 3) == Rat(19, 648));  // (28 - 9)/648
    CHECK(closed_form_count(3, 5) == 0);             // odd triangle counts vanish
    CHECK_THROWS(closed_form_count(3, 0));
}

TEST_CASE("constant fitting recovers the printed constants", "[modforms]") {
    for (int gon : {3, 4, 6}) {
        std::map<int, Rat> counts;
        for (int n : fit_sample_tiles(gon))
            counts[n] = weighted_count(generate(gon, n));
        CHECK(fit_constants(gon, counts) == golden_constants(gon));
    }
    CHECK(golden_constants(3) ==
          std::vector<Rat>{Rat(809) / (Rat(Int(1) << 15) * Rat(Int("1594323")) * 25)});
    CHECK(golden_constants(4) == std::vector<Rat>{Rat(1, 73728), Rat(1, 9216)});
    CHECK(golden_constants(6) == std::vector<Rat>{Rat(1, 648), Rat(-1, 72)});
}

TEST_CASE("fitted series matches enumeration beyond the fit window", "[modforms]") {
    for (auto [gon, n_max] : std::vector<std::pair<int, int>>{{3, 10}, {4, 6}, {6, 5}}) {
        QSeries s = fitted_series(gon, golden_constants(gon), n_max);
        for (int n = 1; n <= n_max; ++n) {
            Rat m = q_exponent(gon, n);
            if (m.get_den() != 1) continue;
            CHECK(s.at(static_cast<int>(m.get_num().get_si())) ==
                  weighted_count(generate(gon, n)));
        }
    }
}

TEST_CASE("missing fit inputs are rejected", "[modforms]") {
    CHECK_THROWS(fit_constants(4, {{1, Rat(1, 73728)}}));
}

TEST_CASE("volumes", "[modforms]") {
    for (int gon : {3, 4, 6})
        CHECK(moduli_volume(gon, golden_constants(gon)) == golden_volume(gon));
    // printed multipliers
    CHECK(golden_volume(4) == Rat(1, 120960));       // 2^7 3^3 5 7
    CHECK(golden_volume(6) == Rat(2, 1215));         // 3^5 5
    CHECK(volume_pi_power(3) == 9);
    CHECK(volume_pi_power(4) == 5);
    CHECK(volume_pi_power(6) == 3);
}
