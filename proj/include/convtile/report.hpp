#pragma once

// JSON report builders behind the CLI subcommands. Exact rationals are
// always serialized as "p/q" strings, never floats.

#include <string>
#include <vector>

#include <json.hpp>

#include "convtile/counting.hpp"
#include "convtile/cyclo.hpp"
#include "convtile/enumerate.hpp"
#include "convtile/hermlat.hpp"
#include "convtile/maps.hpp"
#include "convtile/modforms.hpp"

namespace convtile {

using json = nlohmann::json;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Gram matrix as nested arrays of "a+b*z" strings.
inline json gram_json(const HermGram& g) {
    json rows = json::array();
    for (int i = 0; i < g.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.dim(); ++j) row.push_back(g.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

// Per-k lattice identities: determinant, modularity, real form, signature,
// reflections; k=4 adds the definite shell / isometry / stabilizer chain.
inline json lattice_report(int k) {
    HermGram g = gram_star(k);
    Cyc det = herm_det(g);
    // det should equal -|1+zeta|^(2k-2)
    Rat mag(1);
    for (int i = 0; i < k - 1; ++i) mag *= normsq_one_plus_zeta(k);
    Rat expected_det = -mag;

    RealGram r = real_gram(g);
    auto sig = signature(r);

    bool reflections_ok = true;
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<Cyc> m = reflection_matrix(g, i);
        if (!is_hermitian_isometry(g, m)) reflections_ok = false;
        for (const Cyc& c : m)
            if (!c.is_integral()) reflections_ok = false;
    }

    json out;
    out["k"] = k;
    out["dim"] = g.dim();
    out["gram"] = gram_json(g);
    out["det"] = det.str();
    out["det_matches_closed_form"] = (det == Cyc::from_rat(k, expected_det));
    out["alpha_modular"] = is_alpha_modular(g, one_plus_zeta(k));
    out["real_det"] = real_det(r).get_str();
    out["real_even_diagonal"] = r.has_even_diagonal();
    out["signature"] = json::array({sig.first, sig.second});
    out["reflections_are_integral_isometries"] = reflections_ok;

    if (k == 4) {
        Sublattice l = lattice_L();
        auto shell = definite_shell(l, -2);
        Int ul = definite_isometry_group_order(l);
        out["shell_norm_minus2_count"] = shell.size();
        out["isometry_group_order"] = ul.get_str();
        Int stab = Int(8) * ul * ul;
        out["stabilizer_order"] = stab.get_str();
    }
    return out;
}

// One counts row: tiling count, exact weighted count, profile histogram.
inline json counts_row(int gon, int n_tiles, const std::vector<Tiling>& tilings,
                       bool unoriented = false) {
    json row;
    row["g"] = gon;
    row["n"] = n_tiles;
    row["num_tilings"] = tilings.size();
    Rat wc = unoriented ? unoriented_weighted_count(tilings) : weighted_count(tilings);
    row["weighted_count"] = rat_str(wc);
    row["oriented"] = !unoriented;
    json profiles = json::object();
    for (auto& [profile, count] : profile_histogram(tilings)) profiles[profile] = count;
    row["profiles"] = profiles;
    return row;
}

// Enumerated weighted counts at the tile numbers needed by the fit.
inline std::map<int, Rat> fit_input_counts(int gon, int budget, int threads) {
    std::map<int, Rat> counts;
    for (int n : fit_sample_tiles(gon))
        counts[n] = weighted_count(generate(gon, n, budget, threads));
    return counts;
}

inline json fit_report(int gon, int budget, int threads) {
    std::vector<Rat> fitted = fit_constants(gon, fit_input_counts(gon, budget, threads));
    std::vector<Rat> golden = golden_constants(gon);
    json out;
    out["g"] = gon;
    json fitted_json = json::array(), golden_json = json::array();
    for (const Rat& c : fitted) fitted_json.push_back(rat_str(c));
    for (const Rat& c : golden) golden_json.push_back(rat_str(c));
    out["fitted_constants"] = fitted_json;
    out["expected_constants"] = golden_json;
    out["match"] = (fitted == golden);
    return out;
}

// Volume multipliers extracted from fitted constants, checked against the
// golden values; pi powers are carried as symbolic tags.
inline json volumes_report(int budget_tri, int budget_sq, int budget_hex, int threads) {
    json rows = json::array();
    bool all_ok = true;
    for (int gon : {3, 4, 6}) {
        int budget = gon == 3 ? budget_tri : (gon == 4 ? budget_sq : budget_hex);
        std::vector<Rat> constants = fit_constants(gon, fit_input_counts(gon, budget, threads));
        Rat vol = moduli_volume(gon, constants);
        Rat expected = golden_volume(gon);
        bool ok = (vol == expected);
        all_ok = all_ok && ok;
        json row;
        row["g"] = gon;
        row["volume"] = rat_str(vol);
        row["pi_power"] = volume_pi_power(gon);
        row["expected"] = rat_str(expected);
        row["pass"] = ok;
        rows.push_back(row);
    }
    json out;
    out["rows"] = rows;
    out["all_pass"] = all_ok;
    return out;
}

// Per-n comparison of enumerated weighted counts against the closed form;
// optionally also checks that unoriented counts are exactly half.
inline json verify_report(int gon, int n_max, int budget, int threads,
                          bool check_unoriented) {
    json rows = json::array();
    bool all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Tiling> tilings = generate(gon, n, budget, threads);
        Rat wc = weighted_count(tilings);
        Rat cf = closed_form_count(gon, n);
        if (gon == 3 && n % 2 == 1) {
            // No triangulation has an odd face count; both sides must vanish.
            if (!tilings.empty() || wc != 0 || cf != 0) all_ok = false;
            continue;
        }
        bool ok = (wc == cf);
        json row;
        row["g"] = gon;
        row["n"] = n;
        row["num_tilings"] = tilings.size();
        row["enumerated"] = rat_str(wc);
        row["closed_form"] = rat_str(cf);
        json profiles = json::object();
        for (auto& [profile, count] : profile_histogram(tilings)) profiles[profile] = count;
        row["profiles"] = profiles;
        if (check_unoriented) {
            Rat un = unoriented_weighted_count(tilings);
            bool half = (wc == 2 * un);
            row["unoriented"] = rat_str(un);
            row["unoriented_is_half"] = half;
            ok = ok && half;
        }
        row["pass"] = ok;
        all_ok = all_ok && ok;
        rows.push_back(row);
    }
    json out;
    out["g"] = gon;
    out["rows"] = rows;
    out["all_pass"] = all_ok;
    return out;
}

}  // namespace convtile
