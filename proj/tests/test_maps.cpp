#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "convtile/enumerate.hpp"
#include "convtile/maps.hpp"
#include "helpers.hpp"

using namespace convtile;
using convtile::testing::by_profile;
using convtile::testing::random_permutation;

namespace {

// Two triangles glued along all three edges: face cycles (0,1,2) and
// (3,5,4), alpha pairs opposite darts, three vertices of degree 2.
Tiling double_triangle() {
    Tiling t;
    t.gon = 3;
    t.map.n_darts = 6;
    t.map.alpha = {3, 4, 5, 0, 1, 2};
    t.map.sigma = {5, 3, 4, 1, 2, 0};
    return t;
}

// Bipyramid over an m-gon: 2m triangles, two apex vertices of degree m.
// Faces are built from their cycles; sigma is recovered as phi o alpha.
Tiling bipyramid(int m) {
    int n_darts = 6 * m;
    std::vector<int> phi(n_darts), alpha(n_darts);
    auto a = [&](int i) { return 6 * i; };      // upper spoke i
    auto e = [&](int i) { return 6 * i + 1; };  // upper equator i
    auto b = [&](int i) { return 6 * i + 2; };  // upper spoke i+1
    auto f = [&](int i) { return 6 * i + 3; };  // lower equator i
    auto g = [&](int i) { return 6 * i + 4; };  // lower spoke i+1
    auto h = [&](int i) { return 6 * i + 5; };  // lower spoke i
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        phi[a(i)] = e(i); phi[e(i)] = b(i); phi[b(i)] = a(i);
        phi[f(i)] = h(i); phi[h(i)] = g(i); phi[g(i)] = f(i);
        alpha[b(i)] = a(j); alpha[a(j)] = b(i);
        alpha[e(i)] = f(i); alpha[f(i)] = e(i);
        alpha[g(i)] = h(j); alpha[h(j)] = g(i);
    }
    Tiling t;
    t.gon = 3;
    t.map.n_darts = n_darts;
    t.map.alpha = alpha;
    t.map.sigma.resize(n_darts);
    for (int d = 0; d < n_darts; ++d) t.map.sigma[d] = phi[alpha[d]];
    return t;
}

}  // namespace

TEST_CASE("validate accepts the double triangle", "[maps]") {
    Tiling t = double_triangle();
    CHECK(validate(t).empty());
    CHECK(curvature_profile(t) == CurvatureProfile{4, 4, 4});
}

TEST_CASE("degree over the cap is flagged", "[maps]") {
    // Hexagonal bipyramid: apex degree 6 = cap, still valid (flat apexes).
    CHECK(validate(bipyramid(6)).empty());
    // Heptagonal bipyramid: apex degree 7 exceeds the cap.
    std::vector<std::string> issues = validate(bipyramid(7));
    bool flagged = false;
    for (const std::string& s : issues)
        if (s.find("vertex cap exceeded") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("vertex caps per face size", "[maps]") {
    CHECK(vertex_cap(3) == 6);
    CHECK(vertex_cap(4) == 4);
    CHECK(vertex_cap(6) == 3);
    CHECK_THROWS(vertex_cap(5));
}

TEST_CASE("white vertex that is not flat is flagged", "[maps]") {
    std::vector<Tiling> ones = generate(6, 1);
    REQUIRE(ones.size() == 1);
    Tiling bad = ones[0];
    // flipping every color keeps the coloring proper but paints the curved
    // (degree < 3) vertices white
    for (int& c : bad.colors) c ^= 1;
    std::vector<std::string> issues = validate(bad);
    bool flagged = false;
    for (const std::string& s : issues)
        if (s.find("white vertex not flat") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("curvature profiles of the smallest tilings", "[maps]") {
    CHECK(curvature_profile(double_triangle()) == CurvatureProfile{4, 4, 4});
    std::vector<Tiling> hex1 = generate(6, 1);
    REQUIRE(hex1.size() == 1);
    CHECK(curvature_profile(hex1[0]) == CurvatureProfile{2, 2, 2});
    std::vector<Tiling> sq1 = generate(4, 1);
    REQUIRE(sq1.size() == 1);
    CHECK(curvature_profile(sq1[0]) == CurvatureProfile{3, 3, 2});
}

TEST_CASE("canonical code is relabeling invariant", "[maps][property]") {
    std::mt19937 rng(99);
    for (auto [gon, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 2}, {6, 2}}) {
        for (const Tiling& t : generate(gon, n)) {
            std::string code = canonical_code(t);
            for (int i = 0; i < 8; ++i) {
                Tiling r = relabel(t, random_permutation(t.map.n_darts, rng));
                CHECK(validate(r).empty());
                CHECK(canonical_code(r) == code);
                CHECK(aut_order(r) == aut_order(t));
            }
        }
    }
}

TEST_CASE("small tilings get distinct codes", "[maps]") {
    std::vector<Tiling> tri2 = generate(3, 2);
    REQUIRE(tri2.size() == 2);
    CHECK(canonical_code(tri2[0]) != canonical_code(tri2[1]));

    std::vector<Tiling> sq2 = generate(4, 2);
    REQUIRE(sq2.size() == 3);
    std::set<std::string> codes;
    for (const Tiling& t : sq2) codes.insert(canonical_code(t));
    CHECK(codes.size() == 3);
}

TEST_CASE("automorphism orders of the figure tilings", "[maps]") {
    CHECK(aut_order(by_profile(generate(3, 2), {4, 4, 4})) == 6);
    CHECK(aut_order(by_profile(generate(4, 2), {2, 2, 2, 2})) == 8);
    CHECK(aut_order(by_profile(generate(6, 1), {2, 2, 2})) == 3);
}

TEST_CASE("invalid input to curvature_profile is rejected", "[maps]") {
    Tiling bad;
    bad.gon = 3;
    bad.map.n_darts = 6;
    bad.map.alpha = {3, 4, 5, 0, 1, 2};
    bad.map.sigma = {0, 1, 2, 3, 4, 5};  // six degree-1 vertices: wrong Euler
    CHECK_FALSE(validate(bad).empty());
    CHECK_THROWS_AS(curvature_profile(bad), std::domain_error);
}

TEST_CASE("interchange round trip", "[maps]") {
    for (auto [gon, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 2}, {6, 2}}) {
        for (const Tiling& t : generate(gon, n)) {
            Tiling back = from_interchange(to_interchange(t));
            CHECK(back.gon == t.gon);
            CHECK(back.map.alpha == t.map.alpha);
            CHECK(back.map.sigma == t.map.sigma);
            CHECK(back.colors == t.colors);
        }
    }
    CHECK_THROWS(from_interchange("not a tiling record"));
}

TEST_CASE("hexagon tilings triangulate to valid triangulations", "[maps]") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Tiling> hexes = generate(6, n);
        std::set<std::string> tri_codes;
        for (const Tiling& h : hexes) {
            Tiling tri = hexagon_to_triangulation(h);
            CHECK(tri.gon == 3);
            CHECK(validate(tri).empty());
            CHECK(tri.map.n_darts == 6 * n);  // 2n triangles
            tri_codes.insert(canonical_code(tri));
            // curvature deficits double; flat white vertices drop out
            CurvatureProfile doubled;
            for (int mu : curvature_profile(h)) doubled.push_back(2 * mu);
            std::sort(doubled.begin(), doubled.end(), std::greater<int>());
            CHECK(curvature_profile(tri) == doubled);
        }
        CHECK(tri_codes.size() == hexes.size());  // the route is injective
    }
}
