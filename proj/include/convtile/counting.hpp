#pragma once

// Tiling weights, stabilizer orders, and exact weighted counts per tile
// number. All arithmetic is rational; weights are never floated.

#include <map>
#include <string>
#include <vector>

#include "convtile/cyclo.hpp"
#include "convtile/enumerate.hpp"
#include "convtile/maps.hpp"

namespace convtile {

// Per-singularity weight factor (1 - mu/k)^(mu-1) / mu!.
inline Rat curvature_factor(int mu, int k) {
    Rat base = Rat(k - mu, k);
    Rat pw(1);
    for (int i = 0; i < mu - 1; ++i) pw *= base;
    Rat fact(1);
    for (int i = 2; i <= mu; ++i) fact *= i;
    return pw / fact;
}

// wt(T) = 1/|Aut+(T)| * prod_i (1 - mu_i/k)^(mu_i - 1) / mu_i!.
inline Rat weight(const Tiling& t) {
    int k = curvature_index(t.gon);
    Rat w(1, aut_order(t));
    for (int mu : curvature_profile(t)) w *= curvature_factor(mu, k);
    return w;
}

// |Stab(v)| = |Aut+(T)| * prod_i mu_i! / (1 - mu_i/k)^(mu_i - 1) = 1/wt(T).
inline Rat stab_order(const Tiling& t) {
    int k = curvature_index(t.gon);
    Rat s(aut_order(t));
    for (int mu : curvature_profile(t)) s /= curvature_factor(mu, k);
    return s;
}

// Weight in the unoriented convention: full Aut (reflections included).
inline Rat unoriented_weight(const Tiling& t) {
    int k = curvature_index(t.gon);
    Rat w(1, full_aut_order(t));
    for (int mu : curvature_profile(t)) w *= curvature_factor(mu, k);
    return w;
}

// Sum of weights over all oriented convex tilings with n tiles.
inline Rat weighted_count(const std::vector<Tiling>& tilings) {
    Rat sum(0);
    for (const Tiling& t : tilings) sum += weight(t);
    return sum;
}

// Sum over unoriented classes: mirror-paired oriented classes are counted
// once, with the full automorphism group in the weight.
inline Rat unoriented_weighted_count(const std::vector<Tiling>& tilings) {
    std::map<std::string, const Tiling*> classes;
    for (const Tiling& t : tilings) {
        std::string code = canonical_code(t);
        std::string mirror = mirror_code(t);
        classes.emplace(code < mirror ? code : mirror, &t);
    }
    Rat sum(0);
    for (auto& [key, t] : classes) sum += unoriented_weight(*t);
    return sum;
}

inline Rat weighted_count(int gon, int n_tiles, bool unoriented = false,
                          int budget = -1, int threads = 1) {
    std::vector<Tiling> tilings = generate(gon, n_tiles, budget, threads);
    return unoriented ? unoriented_weighted_count(tilings) : weighted_count(tilings);
}

// Profile histogram for report rows: profile string -> number of tilings.
inline std::map<std::string, int> profile_histogram(const std::vector<Tiling>& tilings) {
    std::map<std::string, int> h;
    for (const Tiling& t : tilings) {
        std::string key;
        for (int mu : curvature_profile(t)) {
            if (!key.empty()) key += ",";
            key += std::to_string(mu);
        }
        ++h["(" + key + ")"];
    }
    return h;
}

}  // namespace convtile
