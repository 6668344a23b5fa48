#pragma once

// Exact q-series arithmetic for Eisenstein series, the closed-form counting
// functions, constant fitting against enumerated data, and extraction of
// complex-hyperbolic volumes from the constant terms.

#include <map>
#include <stdexcept>
#include <vector>

#include "convtile/cyclo.hpp"
#include "convtile/enumerate.hpp"
#include "convtile/maps.hpp"

namespace convtile {

// Divisor-power sum: sigma_m(n) = sum of d^m over divisors d of n when n is
// a positive integer, and 0 otherwise.
inline Int sigma_div(int m, const Rat& n_in) {
    if (m < 1) throw std::invalid_argument("sigma power must be >= 1");
    Rat n = n_in;
    n.canonicalize();
    if (n.get_den() != 1 || n <= 0) return 0;
    Int nn = n.get_num();
    Int total(0);
    for (Int d(1); d <= nn; ++d) {
        if (nn % d != 0) continue;
        Int pw(1);
        for (int i = 0; i < m; ++i) pw *= d;
        total += pw;
    }
    return total;
}

// Truncated formal power series in q with exact rational coefficients.
struct QSeries {
    std::vector<Rat> coeffs;  // coefficient of q^i at index i

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    const Rat& at(int i) const { return coeffs.at(i); }

    QSeries& operator+=(const QSeries& o) {
        size_t n = std::min(coeffs.size(), o.coeffs.size());
        coeffs.resize(n);
        for (size_t i = 0; i < n; ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }

    QSeries scaled(const Rat& c) const {
        QSeries r = *this;
        for (Rat& v : r.coeffs) v *= c;
        return r;
    }

    // Substitution q -> q^m, valid to the same truncation order.
    QSeries upsampled(int m, int new_order) const {
        QSeries r;
        r.coeffs.assign(new_order + 1, Rat(0));
        for (int i = 0; i * m <= new_order && i <= order(); ++i)
            r.coeffs[i * m] = coeffs[i];
        return r;
    }
};

// Constant term of E_w: -1/264, -1/504, 1/240 for w = 10, 6, 4.
inline Rat eisenstein_constant(int weight) {
    switch (weight) {
        case 10: return Rat(-1, 264);
        case 6: return Rat(-1, 504);
        case 4: return Rat(1, 240);
        default: throw std::invalid_argument("supported Eisenstein weights: 4, 6, 10");
    }
}

// E_w(scale * tau) to order N: coefficient of q^n is sigma_{w-1}(n/scale).
inline QSeries eisenstein(int weight, int scale, int order) {
    QSeries s;
    s.coeffs.assign(order + 1, Rat(0));
    s.coeffs[0] = eisenstein_constant(weight);
    for (int n = 1; n <= order; ++n)
        s.coeffs[n] = Rat(sigma_div(weight - 1, Rat(n, scale)));
    return s;
}

// Eisenstein basis per face size: weight, and the two scales (second scale
// 0 means the space is one-dimensional).
struct EisensteinBasis {
    int weight;
    int scale1;
    int scale2;
};

inline EisensteinBasis eisenstein_basis(int gon) {
    switch (gon) {
        case 3: return {10, 1, 0};  // weight 10, level 1
        case 4: return {6, 1, 2};   // weight 6, level 2
        case 6: return {4, 1, 3};   // weight 4, level 3
        default: throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// q-exponent of a tiling with n tiles: half the triangle count, otherwise
// the tile count (the exponent is v.v/2 for the corresponding vector).
inline Rat q_exponent(int gon, int n_tiles) {
    Rat m = gon == 3 ? Rat(n_tiles, 2) : Rat(n_tiles);
    m.canonicalize();
    return m;
}

// Divisor-sum closed forms for the weighted counts, with the printed constants.
inline Rat closed_form_count(int gon, int n_tiles) {
    if (n_tiles < 1) throw std::invalid_argument("tile count must be positive");
    switch (gon) {
        case 3: {
            Rat a(809);
            a /= Int(1) << 15;
            a /= Rat(Int("1594323"));  // 3^13
            a /= 25;
            return a * sigma_div(9, Rat(n_tiles, 2));
        }
        case 4: {
            Rat b(1, 8192 * 9);  // 1/(2^13 3^2)
            return b * (Rat(sigma_div(5, Rat(n_tiles))) + 8 * Rat(sigma_div(5, Rat(n_tiles, 2))));
        }
        case 6: {
            Rat d(1, 8 * 81);  // 1/(2^3 3^4)
            return d * (Rat(sigma_div(3, Rat(n_tiles))) - 9 * Rat(sigma_div(3, Rat(n_tiles, 3))));
        }
        default:
            throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// Tile counts whose weighted counts pin down the Eisenstein constants: the
// smallest slots at which the basis coefficient matrix is nonsingular.
inline std::vector<int> fit_sample_tiles(int gon) {
    switch (gon) {
        case 3: return {2};
        case 4: return {1, 2};
        case 6: return {1, 3};  // E_4(3*tau) first contributes at q^3
        default: throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// Solves the exact linear system matching non-constant q-coefficients of the
// Eisenstein combination against enumerated weighted counts. Returns [A],
// [B, C], or [D, F].
inline std::vector<Rat> fit_constants(int gon, const std::map<int, Rat>& counts_by_tiles) {
    EisensteinBasis basis = eisenstein_basis(gon);
    std::vector<int> tiles = fit_sample_tiles(gon);
    auto coeff = [&](int n_tiles, int scale) {
        Rat m = q_exponent(gon, n_tiles);
        return Rat(sigma_div(basis.weight - 1, m / scale));
    };
    auto value = [&](int n_tiles) {
        auto it = counts_by_tiles.find(n_tiles);
        if (it == counts_by_tiles.end())
            throw std::invalid_argument("fit_constants: missing weighted count for " +
                                        std::to_string(n_tiles) + " tiles");
        return it->second;
    };

    if (basis.scale2 == 0) {
        Rat c = coeff(tiles[0], basis.scale1);
        if (c == 0) throw std::logic_error("singular 1x1 Eisenstein system");
        return {value(tiles[0]) / c};
    }
    Rat a = coeff(tiles[0], basis.scale1), b = coeff(tiles[0], basis.scale2);
    Rat c = coeff(tiles[1], basis.scale1), d = coeff(tiles[1], basis.scale2);
    Rat det = a * d - b * c;
    if (det == 0) throw std::logic_error("singular 2x2 Eisenstein system");
    Rat v1 = value(tiles[0]), v2 = value(tiles[1]);
    return {(d * v1 - b * v2) / det, (a * v2 - c * v1) / det};
}

// The Eisenstein combination with the given constants, as a q-series.
inline QSeries fitted_series(int gon, const std::vector<Rat>& constants, int order) {
    EisensteinBasis basis = eisenstein_basis(gon);
    QSeries s = eisenstein(basis.weight, basis.scale1, order).scaled(constants.at(0));
    if (basis.scale2 != 0)
        s += eisenstein(basis.weight, basis.scale2, order).scaled(constants.at(1));
    return s;
}

// The constants as printed in the source formulas (golden values).
inline std::vector<Rat> golden_constants(int gon) {
    switch (gon) {
        case 3: {
            Rat a(809);
            a /= Int(1) << 15;
            a /= Rat(Int("1594323"));
            a /= 25;
            return {a};
        }
        case 4: return {Rat(1, 8192 * 9), Rat(1, 1024 * 9)};
        case 6: return {Rat(1, 8 * 81), Rat(-1, 8 * 9)};
        default: throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// Rational multiplier of pi^(2k-3) in Vol(Gamma \ CH^(2k-3)), recovered from
// the constant term of the fitted combination:
//   Vol = -c0 * k * 4^(2k-3) / (2k-3)!.
inline Rat moduli_volume(int gon, const std::vector<Rat>& constants) {
    EisensteinBasis basis = eisenstein_basis(gon);
    int k = curvature_index(gon);
    Rat c0 = constants.at(0) * eisenstein_constant(basis.weight);
    if (basis.scale2 != 0) c0 += constants.at(1) * eisenstein_constant(basis.weight);
    int s = 2 * k - 3;
    Rat pw(1);
    for (int i = 0; i < s; ++i) pw *= 4;
    Rat fact(1);
    for (int i = 2; i <= s; ++i) fact *= i;
    return -c0 * k * pw / fact;
}

// Golden volume multipliers from the closing computations.
inline Rat golden_volume(int gon) {
    switch (gon) {
        case 3: {
            // 809 / (2^6 3^17 5^3 7 11)
            Rat v(809);
            v /= 64;
            v /= Rat(Int("129140163"));  // 3^17
            v /= 125;
            v /= 77;
            return v;
        }
        case 4: return Rat(1, 128 * 27 * 35);  // 1/(2^7 3^3 5 7)
        case 6: return Rat(2, 243 * 5);        // 2/(3^5 5)
        default: throw std::invalid_argument("face size must be 3, 4 or 6");
    }
}

// pi power carried symbolically alongside the volume multiplier.
inline int volume_pi_power(int gon) { return 2 * curvature_index(gon) - 3; }

}  // namespace convtile
