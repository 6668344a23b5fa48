#pragma once

// Oriented combinatorial maps (darts, vertex rotation sigma, edge involution
// alpha) representing convex tilings, plus canonical codes and oriented
// automorphism groups. Loops, multi-edges and self-glued faces are allowed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace convtile {

struct CombMap {
    int n_darts = 0;
    std::vector<int> alpha;  // fixed-point-free involution (edge pairing)
    std::vector<int> sigma;  // counterclockwise rotation around each vertex

    std::vector<int> phi() const {  // face permutation sigma o alpha
        std::vector<int> f(n_darts);
        for (int d = 0; d < n_darts; ++d) f[d] = sigma[alpha[d]];
        return f;
    }
};

// Convexity caps: at most 6/4/3 polygons at a vertex for g = 3/4/6.
inline int vertex_cap(int gon) {
    switch (gon) {
        case 3: return 6;
        case 4: return 4;
        case 6: return 3;
        default: throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// Curvature index: deficits are multiples of 2*pi/k.
inline int curvature_index(int gon) { return vertex_cap(gon); }

struct Tiling {
    CombMap map;
    int gon = 3;
    // For gon == 6 only: per-dart color of the dart's vertex (0 black, 1 white).
    std::vector<int> colors;
};

using CurvatureProfile = std::vector<int>;  // sorted multiset of mu_i

namespace detail {

// Orbit id per dart for a permutation, plus orbit sizes.
inline int permutation_orbits(const std::vector<int>& perm, std::vector<int>& orbit,
                              std::vector<int>& size) {
    int n = static_cast<int>(perm.size());
    orbit.assign(n, -1);
    size.clear();
    int count = 0;
    for (int d = 0; d < n; ++d) {
        if (orbit[d] >= 0) continue;
        int len = 0;
        for (int e = d; orbit[e] < 0; e = perm[e]) {
            orbit[e] = count;
            ++len;
        }
        size.push_back(len);
        ++count;
    }
    return count;
}

inline bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool is_connected(const CombMap& m) {
    if (m.n_darts == 0) return false;
    std::vector<char> seen(m.n_darts, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!seen[e]) {
                seen[e] = 1;
                ++visited;
                stack.push_back(e);
            }
        }
    }
    return visited == m.n_darts;
}

}  // namespace detail

// Structural sanity of the raw permutation data; throws on garbage input.
inline void check_wellformed(const CombMap& m) {
    if (m.n_darts <= 0 || m.n_darts % 2 != 0)
        throw std::invalid_argument("n_darts must be even and positive");
    if (!detail::is_permutation(m.alpha, m.n_darts) ||
        !detail::is_permutation(m.sigma, m.n_darts))
        throw std::invalid_argument("alpha/sigma are not permutations");
}

// Invariant violations as data; empty means the tiling is valid.
inline std::vector<std::string> validate(const Tiling& t) {
    std::vector<std::string> out;
    const CombMap& m = t.map;
    check_wellformed(m);
    int cap = vertex_cap(t.gon);

    for (int d = 0; d < m.n_darts; ++d) {
        if (m.alpha[d] == d) {
            out.push_back("alpha has fixed point at dart " + std::to_string(d));
            return out;
        }
        if (m.alpha[m.alpha[d]] != d) {
            out.push_back("alpha not an involution at dart " + std::to_string(d));
            return out;
        }
    }
    if (!detail::is_connected(m)) out.push_back("map not connected");

    std::vector<int> vert_orbit, vert_size, face_orbit, face_size;
    int nv = detail::permutation_orbits(m.sigma, vert_orbit, vert_size);
    std::vector<int> face_perm = m.phi();
    int nf = detail::permutation_orbits(face_perm, face_orbit, face_size);

    int euler = nv - m.n_darts / 2 + nf;
    if (euler != 2) out.push_back("Euler characteristic " + std::to_string(euler) + ", not genus 0");

    for (int f = 0; f < nf; ++f)
        if (face_size[f] != t.gon) {
            out.push_back("face " + std::to_string(f) + " has size " +
                          std::to_string(face_size[f]));
            break;
        }
    for (int v = 0; v < nv; ++v)
        if (vert_size[v] > cap) {
            out.push_back("vertex cap exceeded at vertex orbit " + std::to_string(v));
            break;
        }

    if (t.gon == 6) {
        if (static_cast<int>(t.colors.size()) != m.n_darts) {
            out.push_back("missing vertex coloring");
            return out;
        }
        for (int d = 0; d < m.n_darts; ++d) {
            if (t.colors[d] != 0 && t.colors[d] != 1) {
                out.push_back("bad color value at dart " + std::to_string(d));
                return out;
            }
            if (t.colors[m.sigma[d]] != t.colors[d])
                out.push_back("coloring not constant on vertex of dart " + std::to_string(d));
            if (t.colors[m.alpha[d]] == t.colors[d])
                out.push_back("coloring not proper across edge at dart " + std::to_string(d));
        }
        for (int v = 0; v < nv; ++v) {
            int d0 = -1;
            for (int d = 0; d < m.n_darts && d0 < 0; ++d)
                if (vert_orbit[d] == v) d0 = d;
            if (t.colors[d0] == 1 && vert_size[v] != 3) {
                out.push_back("white vertex not flat at vertex orbit " + std::to_string(v));
                break;
            }
        }
    }
    return out;
}

// Cone-angle-deficit indices mu_i = cap - deg(v) over curved vertices; for
// hexagon tilings only black vertices carry curvature.
inline CurvatureProfile curvature_profile(const Tiling& t) {
    if (!validate(t).empty()) throw std::domain_error("curvature_profile of invalid tiling");
    int cap = vertex_cap(t.gon);
    std::vector<int> vert_orbit, vert_size;
    int nv = detail::permutation_orbits(t.map.sigma, vert_orbit, vert_size);

    std::vector<int> color_of_vertex(nv, 0);
    if (t.gon == 6)
        for (int d = 0; d < t.map.n_darts; ++d) color_of_vertex[vert_orbit[d]] = t.colors[d];

    CurvatureProfile mu;
    for (int v = 0; v < nv; ++v) {
        if (t.gon == 6 && color_of_vertex[v] == 1) continue;
        if (vert_size[v] < cap) mu.push_back(cap - vert_size[v]);
    }
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return mu;
}

namespace detail {

// Deterministic BFS relabeling trace from a root dart. Two rooted maps are
// isomorphic iff their traces agree; automorphisms act freely on darts, so
// the roots attaining the minimal trace count Aut+.
inline std::vector<int> rooted_trace(const std::vector<int>& sigma,
                                     const std::vector<int>& alpha,
                                     const std::vector<int>& colors, int root) {
    int n = static_cast<int>(sigma.size());
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    int next = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {sigma[d], alpha[d]})
            if (label[e] < 0) {
                label[e] = next++;
                order.push_back(e);
            }
    }
    std::vector<int> trace;
    trace.reserve(colors.empty() ? 2 * n : 3 * n);
    for (int d : order) {
        trace.push_back(label[sigma[d]]);
        trace.push_back(label[alpha[d]]);
        if (!colors.empty()) trace.push_back(colors[d]);
    }
    return trace;
}

inline std::string trace_to_bytes(int gon, const std::vector<int>& trace) {
    std::string s;
    s.reserve(trace.size() * 2 + 1);
    s.push_back(static_cast<char>(gon));
    for (int v : trace) {
        s.push_back(static_cast<char>((v >> 8) & 0xff));
        s.push_back(static_cast<char>(v & 0xff));
    }
    return s;
}

inline std::pair<std::string, int> min_trace_and_count(const std::vector<int>& sigma,
                                                       const std::vector<int>& alpha,
                                                       const std::vector<int>& colors,
                                                       int gon) {
    int n = static_cast<int>(sigma.size());
    std::vector<int> best;
    int count = 0;
    for (int root = 0; root < n; ++root) {
        std::vector<int> tr = rooted_trace(sigma, alpha, colors, root);
        if (best.empty() || tr < best) {
            best = std::move(tr);
            count = 1;
        } else if (tr == best) {
            ++count;
        }
    }
    return {trace_to_bytes(gon, best), count};
}

}  // namespace detail

// Canonical byte string, invariant and complete for orientation-preserving
// (and color-preserving) isomorphism. Mirror images are not identified.
inline std::string canonical_code(const Tiling& t) {
    return detail::min_trace_and_count(t.map.sigma, t.map.alpha, t.colors, t.gon).first;
}

// Order of the oriented (color-preserving) automorphism group.
inline int aut_order(const Tiling& t) {
    return detail::min_trace_and_count(t.map.sigma, t.map.alpha, t.colors, t.gon).second;
}

// Canonical code of the mirror image (sigma replaced by its inverse).
inline std::string mirror_code(const Tiling& t) {
    std::vector<int> sigma_inv(t.map.n_darts);
    for (int d = 0; d < t.map.n_darts; ++d) sigma_inv[t.map.sigma[d]] = d;
    return detail::min_trace_and_count(sigma_inv, t.map.alpha, t.colors, t.gon).first;
}

// Order of the full automorphism group, orientation-reversing maps included.
inline int full_aut_order(const Tiling& t) {
    int plus = aut_order(t);
    return (mirror_code(t) == canonical_code(t)) ? 2 * plus : plus;
}

// Relabels darts by a permutation pi: new dart pi(d) plays the role of d.
inline Tiling relabel(const Tiling& t, const std::vector<int>& pi) {
    int n = t.map.n_darts;
    Tiling r = t;
    for (int d = 0; d < n; ++d) {
        r.map.sigma[pi[d]] = pi[t.map.sigma[d]];
        r.map.alpha[pi[d]] = pi[t.map.alpha[d]];
        if (!t.colors.empty()) r.colors[pi[d]] = t.colors[d];
    }
    return r;
}

// Derived triangulation of a hexagon tiling: connect the three black
// vertices within each hexagon. Each hexagon contributes its inscribed
// triangle and each white vertex the triangle cut off around it, so n
// hexagons yield 2n triangles whose deficits are even.
inline Tiling hexagon_to_triangulation(const Tiling& t) {
    if (t.gon != 6 || !validate(t).empty())
        throw std::domain_error("hexagon_to_triangulation needs a valid hexagon tiling");
    const CombMap& m = t.map;
    std::vector<int> face = m.phi();
    std::vector<int> face_inv(m.n_darts), sigma_inv(m.n_darts);
    for (int d = 0; d < m.n_darts; ++d) face_inv[face[d]] = d;
    for (int d = 0; d < m.n_darts; ++d) sigma_inv[m.sigma[d]] = d;

    // One chord per black-cornered dart; chord darts come in pairs:
    // 2*idx (inscribed-triangle side) and 2*idx+1 (white-triangle side).
    std::vector<int> chord(m.n_darts, -1);
    int n_chords = 0;
    for (int d = 0; d < m.n_darts; ++d)
        if (t.colors[d] == 0) chord[d] = n_chords++;

    Tiling tri;
    tri.gon = 3;
    tri.map.n_darts = 2 * n_chords;
    tri.map.alpha.assign(2 * n_chords, 0);
    std::vector<int> tri_face(2 * n_chords, 0);
    for (int d = 0; d < m.n_darts; ++d) {
        if (chord[d] < 0) continue;
        int td = 2 * chord[d], ud = 2 * chord[d] + 1;
        tri.map.alpha[td] = ud;
        tri.map.alpha[ud] = td;
        tri_face[td] = 2 * chord[face[face[d]]];
        // Next chord around the white vertex at face(d)'s following corner;
        // the white triangle winds against sigma in this orientation.
        int next_black = face_inv[sigma_inv[face[d]]];
        tri_face[ud] = 2 * chord[next_black] + 1;
    }
    tri.map.sigma.assign(2 * n_chords, 0);
    for (int d = 0; d < 2 * n_chords; ++d)
        tri.map.sigma[d] = tri_face[tri.map.alpha[d]];
    return tri;
}

// --- interchange format -----------------------------------------------
// One tiling per line: g;n_darts;alpha=[...];sigma=[...];colors=[...]
// Dart indices are 0-based; colors lists the per-dart vertex color for
// hexagon tilings and is empty otherwise.

inline std::string to_interchange(const Tiling& t) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    std::string s = std::to_string(t.gon) + ";" + std::to_string(t.map.n_darts);
    s += ";alpha=[" + join(t.map.alpha) + "]";
    s += ";sigma=[" + join(t.map.sigma) + "]";
    s += ";colors=[" + join(t.colors) + "]";
    return s;
}

inline Tiling from_interchange(const std::string& line) {
    auto parse_list = [&](const std::string& key) {
        std::string tag = key + "=[";
        size_t at = line.find(tag);
        if (at == std::string::npos) throw std::invalid_argument("missing " + key);
        size_t from = at + tag.size();
        size_t to = line.find(']', from);
        if (to == std::string::npos) throw std::invalid_argument("unterminated " + key);
        std::vector<int> v;
        std::string body = line.substr(from, to - from);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
        return v;
    };
    Tiling t;
    size_t semi1 = line.find(';');
    size_t semi2 = line.find(';', semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
        throw std::invalid_argument("malformed tiling record");
    t.gon = std::stoi(line.substr(0, semi1));
    t.map.n_darts = std::stoi(line.substr(semi1 + 1, semi2 - semi1 - 1));
    t.map.alpha = parse_list("alpha");
    t.map.sigma = parse_list("sigma");
    t.colors = parse_list("colors");
    if (static_cast<int>(t.map.alpha.size()) != t.map.n_darts ||
        static_cast<int>(t.map.sigma.size()) != t.map.n_darts)
        throw std::invalid_argument("dart count mismatch in tiling record");
    return t;
}

}  // namespace convtile
