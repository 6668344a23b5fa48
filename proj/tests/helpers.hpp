#pragma once

// Shared helpers for the test suites.

#include <random>
#include <string>
#include <vector>

#include "convtile/counting.hpp"
#include "convtile/enumerate.hpp"
#include "convtile/maps.hpp"

namespace convtile::testing {

// First tiling in the list with the given sorted curvature profile.
inline const Tiling& by_profile(const std::vector<Tiling>& tilings,
                                const CurvatureProfile& profile) {
    for (const Tiling& t : tilings)
        if (curvature_profile(t) == profile) return t;
    throw std::runtime_error("no tiling with the requested profile");
}

// Uniformly random dart permutation.
inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

inline std::vector<std::string> code_set(const std::vector<Tiling>& tilings) {
    std::vector<std::string> codes;
    for (const Tiling& t : tilings) codes.push_back(canonical_code(t));
    std::sort(codes.begin(), codes.end());
    return codes;
}

}  // namespace convtile::testing
