#pragma once

// Exhaustive generation of oriented convex tilings with a given number of
// tiles. Two engines with identical output contracts:
//   brute_force - enumerates every fixed-point-free side pairing (oracle),
//   generate    - depth-first face growth with convexity/curvature pruning.

#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convtile/maps.hpp"

namespace convtile {

// Flag/precondition failures surfaced to the CLI as usage errors (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default enumeration budgets (tiles per face size).
inline int default_budget(int gon) {
    switch (gon) {
        case 3: return 12;
        case 4: return 8;
        case 6: return 6;
        default: throw UsageError("face size must be 3, 4 or 6");
    }
}

namespace detail {

// Attempts the bicolored-hexagon vertex coloring: proper 2-coloring with
// every white vertex of degree exactly 3. At most one coloring is valid on
// a sphere tiling, since curvature must exist and be black.
inline std::optional<std::vector<int>> hexagon_coloring(const CombMap& m) {
    std::vector<int> vert_orbit, vert_size;
    int nv = permutation_orbits(m.sigma, vert_orbit, vert_size);

    for (int first_color = 0; first_color < 2; ++first_color) {
        std::vector<int> color(nv, -1);
        color[vert_orbit[0]] = first_color;
        std::vector<int> stack{0};
        std::vector<char> seen(m.n_darts, 0);
        seen[0] = 1;
        bool ok = true;
        while (!stack.empty() && ok) {
            int d = stack.back();
            stack.pop_back();
            int v = vert_orbit[d];
            int w = vert_orbit[m.alpha[d]];
            if (color[w] < 0) color[w] = 1 - color[v];
            else if (color[w] == color[v]) ok = false;
            for (int e : {m.sigma[d], m.alpha[d]})
                if (!seen[e]) {
                    seen[e] = 1;
                    stack.push_back(e);
                }
        }
        if (!ok) continue;
        for (int v = 0; v < nv && ok; ++v)
            if (color[v] == 1 && vert_size[v] != 3) ok = false;
        if (!ok) continue;
        std::vector<int> per_dart(m.n_darts);
        for (int d = 0; d < m.n_darts; ++d) per_dart[d] = color[vert_orbit[d]];
        return per_dart;
    }
    return std::nullopt;
}

// Incremental sigma-link bookkeeping while the edge pairing is being chosen.
// sigma(d) = phi(alpha(d)) becomes known as soon as d is matched; vertex
// orbits appear as chains that close into cycles.
struct MatchState {
    int gon, cap, budget_2k;
    int n_darts;                 // total darts when all faces are placed
    std::vector<int> phi;        // fixed face permutation
    std::vector<int> alpha;      // -1 while unmatched
    std::vector<int> snext, sprev;
    int spent = 0;               // curvature of completed vertices

    MatchState(int g, int total_darts)
        : gon(g), cap(vertex_cap(g)), budget_2k(2 * curvature_index(g)),
          n_darts(total_darts), phi(total_darts), alpha(total_darts, -1),
          snext(total_darts, -1), sprev(total_darts, -1) {
        for (int d = 0; d < total_darts; ++d)
            phi[d] = (d % g == g - 1) ? d - g + 1 : d + 1;
    }

    // Length of the known chain ending at unmatched dart d.
    int back_chain_len(int d) const {
        int len = 1;
        for (int e = sprev[d]; e >= 0; e = sprev[e]) ++len;
        return len;
    }

    // Adds the sigma link u -> v; returns false (after leaving state
    // consistent for undo) when a convexity or curvature bound breaks.
    bool add_link(int u, int v) {
        snext[u] = v;
        sprev[v] = u;
        int len = 1;
        int e = v;
        while (snext[e] >= 0) {
            if (snext[e] == v) break;  // walked around a cycle
            e = snext[e];
            ++len;
        }
        if (snext[e] >= 0) {
            // Completed vertex of degree len.
            if (len > cap) return false;
            spent += cap - len;
            return spent <= budget_2k;
        }
        int total = len;
        for (int b = sprev[v]; b >= 0; b = sprev[b]) ++total;
        return total <= cap;
    }

    void remove_link(int u, int v) {
        // If the link had closed a cycle, give its curvature back.
        int len = 1;
        int e = v;
        while (snext[e] >= 0 && snext[e] != v) {
            e = snext[e];
            ++len;
        }
        if (snext[e] == v) spent -= cap - len;
        snext[u] = -1;
        sprev[v] = -1;
    }

    // Pairs darts d and e; false means pruned (caller must unmatch).
    bool match(int d, int e) {
        alpha[d] = e;
        alpha[e] = d;
        if (!add_link(d, phi[e])) return false;
        return add_link(e, phi[d]);
    }

    void unmatch(int d, int e) {
        if (snext[e] >= 0) remove_link(e, phi[d]);
        if (snext[d] >= 0) remove_link(d, phi[e]);
        alpha[d] = -1;
        alpha[e] = -1;
    }

    Tiling to_tiling() const {
        Tiling t;
        t.gon = gon;
        t.map.n_darts = n_darts;
        t.map.alpha = alpha;
        t.map.sigma.assign(n_darts, 0);
        for (int d = 0; d < n_darts; ++d) t.map.sigma[d] = phi[alpha[d]];
        return t;
    }
};

// Validates a fully matched state and attaches the hexagon coloring;
// nullopt when the closed surface is not a convex sphere tiling.
inline std::optional<Tiling> finish_tiling(const MatchState& st) {
    Tiling t = st.to_tiling();
    if (t.gon == 6) {
        auto colors = hexagon_coloring(t.map);
        if (!colors) return std::nullopt;
        t.colors = *colors;
    }
    if (!validate(t).empty()) return std::nullopt;
    return t;
}

using TilingSet = std::map<std::string, Tiling>;

inline void brute_rec(MatchState& st, TilingSet& out) {
    int d = -1;
    for (int i = 0; i < st.n_darts; ++i)
        if (st.alpha[i] < 0) { d = i; break; }
    if (d < 0) {
        if (auto t = finish_tiling(st)) out.emplace(canonical_code(*t), std::move(*t));
        return;
    }
    for (int e = d + 1; e < st.n_darts; ++e) {
        if (st.alpha[e] >= 0) continue;
        if (st.match(d, e)) brute_rec(st, out);
        st.unmatch(d, e);
    }
}

struct GrowState {
    MatchState st;
    int faces_target;
    int faces_used = 1;

    GrowState(int g, int n) : st(g, n * g), faces_target(n) {}
};

inline void grow_rec(GrowState& gs, TilingSet& out) {
    MatchState& st = gs.st;
    int discovered = gs.faces_used * st.gon;

    // Extend at the unmatched dart with the longest vertex chain behind it,
    // so convexity caps prune as early as possible.
    int d = -1, best_len = -1;
    for (int i = 0; i < discovered; ++i) {
        if (st.alpha[i] >= 0) continue;
        int len = st.back_chain_len(i);
        if (len > best_len) {
            best_len = len;
            d = i;
        }
    }
    if (d < 0) {
        if (gs.faces_used != gs.faces_target) return;
        if (st.spent != st.budget_2k) return;  // closed surface but not genus 0
        if (auto t = finish_tiling(st)) out.emplace(canonical_code(*t), std::move(*t));
        return;
    }

    for (int e = 0; e < discovered; ++e) {
        if (e == d || st.alpha[e] >= 0) continue;
        if (st.match(d, e)) grow_rec(gs, out);
        st.unmatch(d, e);
    }
    if (gs.faces_used < gs.faces_target) {
        // A fresh face is glued at its first side only; its sides are
        // interchangeable until something else references them.
        int e = gs.faces_used * st.gon;
        ++gs.faces_used;
        if (st.match(d, e)) grow_rec(gs, out);
        st.unmatch(d, e);
        --gs.faces_used;
    }
}

inline std::vector<Tiling> set_to_sorted(TilingSet&& s) {
    std::vector<Tiling> out;
    out.reserve(s.size());
    for (auto& [code, t] : s) out.push_back(std::move(t));
    return out;
}

}  // namespace detail

// Oracle engine: all fixed-point-free pairings of the n*g polygon sides,
// filtered by validity, deduplicated by canonical code.
inline std::vector<Tiling> brute_force(int gon, int n_tiles) {
    vertex_cap(gon);
    if (n_tiles < 1) throw UsageError("tile count must be positive");
    if (n_tiles * gon > 18)
        throw UsageError("oracle bound is n*g <= 18 darts; use generate()");
    if ((n_tiles * gon) % 2 != 0) return {};
    detail::MatchState st(gon, n_tiles * gon);
    detail::TilingSet out;
    detail::brute_rec(st, out);
    return detail::set_to_sorted(std::move(out));
}

// Growth engine: depth-first face attachment with convexity-cap and
// curvature-budget pruning. Identical output contract to brute_force.
inline std::vector<Tiling> generate(int gon, int n_tiles, int budget = -1, int threads = 1) {
    vertex_cap(gon);
    if (n_tiles < 1) throw UsageError("tile count must be positive");
    if (budget < 0) budget = default_budget(gon);
    if (n_tiles > budget)
        throw UsageError("tile count " + std::to_string(n_tiles) +
                         " exceeds enumeration budget " + std::to_string(budget));
    if ((n_tiles * gon) % 2 != 0) return {};

    if (threads <= 1 || n_tiles < 2) {
        detail::GrowState gs(gon, n_tiles);
        detail::TilingSet out;
        detail::grow_rec(gs, out);
        return detail::set_to_sorted(std::move(out));
    }

    // Parallel mode: split on the first attachment decision. Dart 0 is
    // matched either within face 0 or to a fresh face; each branch explores
    // independently and the merged map keeps the result deterministic.
    std::vector<std::future<detail::TilingSet>> futs;
    auto run_branch = [gon, n_tiles](int partner, bool fresh) {
        detail::GrowState gs(gon, n_tiles);
        detail::TilingSet out;
        if (fresh) ++gs.faces_used;
        if (gs.st.match(0, partner)) detail::grow_rec(gs, out);
        gs.st.unmatch(0, partner);
        return out;
    };
    for (int e = 1; e < gon; ++e)
        futs.push_back(std::async(std::launch::async, run_branch, e, false));
    if (n_tiles > 1)
        futs.push_back(std::async(std::launch::async, run_branch, gon, true));

    detail::TilingSet merged;
    for (auto& f : futs) {
        detail::TilingSet part = f.get();
        merged.insert(part.begin(), part.end());
    }
    return detail::set_to_sorted(std::move(merged));
}

}  // namespace convtile
