#pragma once

// Hermitian Gram matrices over Z[zeta_k], their real forms, and the
// definite-lattice vector / isometry enumeration used for the k=4
// stabilizer computation.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convtile/cyclo.hpp"

namespace convtile {

// Square conjugate-symmetric matrix over Q(zeta_k).
class HermGram {
public:
    HermGram(int k, int dim) : k_(k), dim_(dim), a_(dim * dim, Cyc::zero(k)) {
        if (dim <= 0) throw std::invalid_argument("HermGram dimension must be positive");
    }

    int k() const { return k_; }
    int dim() const { return dim_; }

    const Cyc& at(int i, int j) const { return a_[i * dim_ + j]; }
    Cyc& at(int i, int j) { return a_[i * dim_ + j]; }

    bool is_conjugate_symmetric() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (at(j, i) != at(i, j).conj()) return false;
        return true;
    }

private:
    int k_, dim_;
    std::vector<Cyc> a_;
};

// Symmetric integer Gram matrix of the underlying Z-lattice.
class RealGram {
public:
    explicit RealGram(int dim) : dim_(dim), a_(dim * dim, Int(0)) {}

    int dim() const { return dim_; }
    const Int& at(int i, int j) const { return a_[i * dim_ + j]; }
    Int& at(int i, int j) { return a_[i * dim_ + j]; }

    bool has_even_diagonal() const {
        for (int i = 0; i < dim_; ++i)
            if (at(i, i) % 2 != 0) return false;
        return true;
    }

private:
    int dim_;
    std::vector<Int> a_;
};

// The (2k-2)-dimensional tridiagonal Gram matrix of the star form:
// diagonal -|1+zeta|^2, superdiagonal 1+conj(zeta), subdiagonal 1+zeta.
inline HermGram gram_star(int k) {
    int dim = 2 * k - 2;
    HermGram g(k, dim);
    Cyc opz = one_plus_zeta(k);
    Cyc diag = Cyc::from_rat(k, -opz.normsq());
    for (int i = 0; i < dim; ++i) {
        g.at(i, i) = diag;
        if (i + 1 < dim) {
            g.at(i, i + 1) = opz.conj();
            g.at(i + 1, i) = opz;
        }
    }
    return g;
}

// Exact determinant by Gaussian elimination over the field Q(zeta_k).
inline Cyc herm_det(const HermGram& g) {
    int n = g.dim();
    std::vector<Cyc> m;
    m.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.push_back(g.at(i, j));

    Cyc det = Cyc::one(g.k());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r * n + col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return Cyc::zero(g.k());
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
            det = -det;
        }
        Cyc p = m[col * n + col];
        det *= p;
        Cyc pinv = p.inv();
        for (int r = col + 1; r < n; ++r) {
            Cyc f = m[r * n + col] * pinv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j)
                m[r * n + j] -= f * m[col * n + j];
        }
    }
    return det;
}

// Lambda = alpha * Lambda-dual, tested as (a) every Gram entry divisible by
// alpha in Z[zeta_k] and (b) |det G|^2 = |alpha|^(2*dim).
inline bool is_alpha_modular(const HermGram& g, const Cyc& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            if (!ring_divides(alpha, g.at(i, j))) return false;
    Rat lhs = herm_det(g).normsq();
    Rat rhs = 1;
    Rat na = alpha.normsq();
    for (int i = 0; i < g.dim(); ++i) rhs *= na;
    return lhs == rhs;
}

// Real Gram matrix in the Z-basis {e_1, zeta*e_1, ..., e_d, zeta*e_d},
// pairing x.y = (2/|1+zeta|^2) Re(x star y). All entries must be integral.
inline RealGram real_gram(const HermGram& g) {
    int k = g.k();
    int d = g.dim();
    Rat scale = Rat(2) / normsq_one_plus_zeta(k);
    Cyc zpow[2] = {Cyc::one(k), Cyc::zeta(k)};
    RealGram r(2 * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    Rat v = scale * (zpow[p].conj() * g.at(i, j) * zpow[q]).re();
                    if (v.get_den() != 1)
                        throw std::logic_error("real_gram entry not integral");
                    r.at(2 * i + p, 2 * j + q) = v.get_num();
                }
    return r;
}

// Exact integer determinant (Bareiss fraction-free elimination).
inline Int real_det(const RealGram& r) {
    int n = r.dim();
    std::vector<Int> m;
    m.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.push_back(r.at(i, j));

    int sign = 1;
    Int prev(1);
    for (int col = 0; col < n - 1; ++col) {
        if (m[col * n + col] == 0) {
            int pivot = -1;
            for (int rr = col + 1; rr < n; ++rr)
                if (m[rr * n + col] != 0) { pivot = rr; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
            sign = -sign;
        }
        for (int rr = col + 1; rr < n; ++rr)
            for (int j = col + 1; j < n; ++j) {
                Int t = m[rr * n + j] * m[col * n + col] - m[rr * n + col] * m[col * n + j];
                mpz_divexact(m[rr * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[col * n + col];
    }
    return sign * m[n * n - 1];
}

namespace detail {

// Characteristic polynomial det(x*I - M) of a rational square matrix by the
// Faddeev-LeVerrier recurrence. Returns coefficients c[0..n], c[n] = 1.
inline std::vector<Rat> char_poly(const std::vector<Rat>& m, int n) {
    std::vector<Rat> mk(m);          // M_1 = M
    std::vector<Rat> coef(n + 1, Rat(0));
    coef[n] = 1;
    for (int step = 1; step <= n; ++step) {
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mk[i * n + i];
        Rat c = -tr / step;
        coef[n - step] = c;
        if (step == n) break;
        // M_{k+1} = M * (M_k + c*I)
        std::vector<Rat> shifted(mk);
        for (int i = 0; i < n; ++i) shifted[i * n + i] += c;
        std::vector<Rat> next(n * n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m[i * n + l] == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[i * n + j] += m[i * n + l] * shifted[l * n + j];
            }
        mk = std::move(next);
    }
    return coef;
}

// Descartes sign-change count. Exact root count for polynomials with all
// real roots, which covers characteristic polynomials of symmetric matrices.
inline int descartes_positive_roots(const std::vector<Rat>& coef) {
    int changes = 0;
    int last = 0;
    for (const Rat& c : coef) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

// Signature (p, q) of a symmetric rational matrix via exact sign counting on
// the characteristic polynomial. Throws on a degenerate matrix.
inline std::pair<int, int> signature_rational(const std::vector<Rat>& m, int n) {
    std::vector<Rat> coef = detail::char_poly(m, n);
    if (coef[0] == 0) throw std::domain_error("signature of degenerate matrix");
    int pos = detail::descartes_positive_roots(coef);
    std::vector<Rat> neg_coef(coef);
    for (int i = 1; i <= n; i += 2) neg_coef[i] = -neg_coef[i];
    int neg = detail::descartes_positive_roots(neg_coef);
    return {pos, neg};
}

inline std::pair<int, int> signature(const RealGram& r) {
    int n = r.dim();
    std::vector<Rat> m(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = Rat(r.at(i, j));
    return signature_rational(m, n);
}

// Matrix of the complex reflection r_beta_i in the basis (beta_1..beta_d):
//   r(lambda) = lambda - (1+zeta) * (beta star lambda)/(beta star beta) * beta.
// Columns hold images of basis vectors.
inline std::vector<Cyc> reflection_matrix(const HermGram& g, int i) {
    int k = g.k();
    int d = g.dim();
    if (i < 0 || i >= d) throw std::out_of_range("reflection index");
    std::vector<Cyc> r(d * d, Cyc::zero(k));
    for (int j = 0; j < d; ++j) r[j * d + j] = Cyc::one(k);
    Cyc factor = one_plus_zeta(k) * g.at(i, i).inv();
    for (int j = 0; j < d; ++j)
        r[i * d + j] -= factor * g.at(i, j);
    return r;
}

// Checks r-dagger * G * r == G entrywise.
inline bool is_hermitian_isometry(const HermGram& g, const std::vector<Cyc>& r) {
    int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Cyc s = Cyc::zero(g.k());
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    s += r[p * d + i].conj() * g.at(p, q) * r[q * d + j];
            if (s != g.at(i, j)) return false;
        }
    return true;
}

// A sublattice of a Hermitian ambient lattice: generators are rows of
// Z[zeta_k] coordinates in the ambient basis.
struct Sublattice {
    HermGram ambient;
    std::vector<std::vector<Cyc>> gens;

    int rank() const { return static_cast<int>(gens.size()); }
};

// The congruence lattice L = {(a,b) in Z[i]^2 : a = b mod 1+i} inside the
// diagonal form diag(-1,-1), generated by (1+i, 0) and (1, 1).
inline Sublattice lattice_L() {
    HermGram amb(4, 2);
    amb.at(0, 0) = Cyc::from_rat(4, -1);
    amb.at(1, 1) = Cyc::from_rat(4, -1);
    Sublattice l{amb, {}};
    l.gens.push_back({one_plus_zeta(4), Cyc::zero(4)});
    l.gens.push_back({Cyc::one(4), Cyc::one(4)});
    return l;
}

// Rank-1 lattice Z[i] with the form <-1>.
inline Sublattice lattice_minus_one() {
    HermGram amb(4, 1);
    amb.at(0, 0) = Cyc::from_rat(4, -1);
    return Sublattice{amb, {{Cyc::one(4)}}};
}

// Gram matrix of the generators under the ambient form.
inline HermGram sublattice_gram(const Sublattice& l) {
    int k = l.ambient.k();
    int r = l.rank();
    int d = l.ambient.dim();
    HermGram g(k, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Cyc s = Cyc::zero(k);
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    s += l.gens[i][p].conj() * l.ambient.at(p, q) * l.gens[j][q];
            g.at(i, j) = s;
        }
    return g;
}

namespace detail {

// Real quadratic form of v star v in the integer coordinates
// (re c_1, im c_1, ..., re c_r, im c_r) of v = sum c_i g_i.
inline std::vector<Rat> star_real_form(const HermGram& g) {
    int k = g.k();
    int r = g.dim();
    int n = 2 * r;
    Cyc zpow[2] = {Cyc::one(k), Cyc::zeta(k)};
    std::vector<Rat> s(n * n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q)
                    s[(2 * i + p) * n + (2 * j + q)] =
                        (zpow[p].conj() * g.at(i, j) * zpow[q]).re();
    return s;
}

// Symmetrized value x^T S x for a possibly non-symmetric S.
inline Rat eval_form(const std::vector<Rat>& s, const std::vector<long>& x) {
    int n = static_cast<int>(x.size());
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            acc += s[i * n + j] * x[i] * x[j];
        }
    }
    return acc;
}

// Largest t >= 0 with t^2 <= bound (bound a nonnegative rational).
inline long rat_isqrt_floor(const Rat& bound) {
    Int q = bound.get_num() / bound.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    return root.get_si();
}

// Diagonal of the inverse of a positive definite rational matrix, via
// Gauss-Jordan on an augmented identity.
inline std::vector<Rat> inverse_diag(std::vector<Rat> m, int n) {
    std::vector<Rat> inv(n * n, Rat(0));
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular form");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        Rat p = m[col * n + col];
        for (int j = 0; j < n; ++j) { m[col * n + j] /= p; inv[col * n + j] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r * n + col] == 0) continue;
            Rat f = m[r * n + col];
            for (int j = 0; j < n; ++j) {
                m[r * n + j] -= f * m[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    std::vector<Rat> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = inv[i * n + i];
    return diag;
}

}  // namespace detail

// Vector in generator coordinates, with exact star-norm ordering helpers.
using LatticeVector = std::vector<Cyc>;

inline bool lattice_vector_less(const LatticeVector& x, const LatticeVector& y) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].a() != y[i].a()) return x[i].a() < y[i].a();
        if (x[i].b() != y[i].b()) return x[i].b() < y[i].b();
    }
    return false;
}

// All sublattice vectors with v star v == norm (norm < 0), by exhaustive
// search in the exact bounding box of the definite real form.
inline std::vector<LatticeVector> definite_shell(const Sublattice& lat, long norm) {
    if (norm >= 0) throw std::invalid_argument("shell norm must be negative");
    HermGram g = sublattice_gram(lat);
    int r = g.dim();
    int n = 2 * r;
    std::vector<Rat> s = detail::star_real_form(g);

    // Definiteness guard: -S must be positive definite.
    std::vector<Rat> neg(s);
    for (Rat& v : neg) v = -v;
    // Symmetrize before the signature test.
    std::vector<Rat> sym(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym[i * n + j] = (neg[i * n + j] + neg[j * n + i]) / 2;
    auto sig = signature_rational(sym, n);
    if (sig.first != n)
        throw std::domain_error("definite_shell requires a negative definite lattice");

    Rat target(-norm);
    std::vector<Rat> inv_diag = detail::inverse_diag(sym, n);
    std::vector<long> bound(n);
    for (int i = 0; i < n; ++i)
        bound[i] = detail::rat_isqrt_floor(target * inv_diag[i]);

    std::vector<LatticeVector> out;
    std::vector<long> x(n, 0);
    // Nested box walk; ranks here are at most 2, so n <= 4.
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            if (detail::eval_form(s, x) == Rat(norm)) {
                LatticeVector v(r, Cyc::zero(g.k()));
                for (int i = 0; i < r; ++i)
                    v[i] = Cyc(g.k(), Rat(x[2 * i]), Rat(x[2 * i + 1]));
                out.push_back(std::move(v));
            }
            return;
        }
        for (long t = -bound[idx]; t <= bound[idx]; ++t) {
            x[idx] = t;
            self(self, idx + 1);
        }
        x[idx] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), lattice_vector_less);
    return out;
}

namespace detail {

inline Cyc pair_vectors(const HermGram& g, const LatticeVector& x, const LatticeVector& y) {
    Cyc s = Cyc::zero(g.k());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            s += x[i].conj() * g.at(i, j) * y[j];
    return s;
}

}  // namespace detail

// Order of the Hermitian isometry group of a negative definite sublattice,
// by backtracking over basis images among shell vectors with matching
// pairwise Gram entries. A form-preserving endomorphism of a definite
// lattice is automatically invertible, so no extra surjectivity check.
inline Int definite_isometry_group_order(const Sublattice& lat) {
    HermGram g = sublattice_gram(lat);
    int r = g.dim();

    std::vector<std::vector<LatticeVector>> shells(r);
    for (int i = 0; i < r; ++i) {
        Rat norm = g.at(i, i).re();
        if (norm >= 0)
            throw std::domain_error("isometry group search requires a negative definite lattice");
        shells[i] = definite_shell(lat, norm.get_num().get_si());
    }

    Int count(0);
    std::vector<LatticeVector> image(r);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == r) { ++count; return; }
        for (const LatticeVector& cand : shells[idx]) {
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j)
                ok = detail::pair_vectors(g, image[j], cand) == g.at(j, idx);
            if (!ok) continue;
            image[idx] = cand;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace convtile
