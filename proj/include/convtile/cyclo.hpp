#pragma once

// Exact arithmetic in Q(zeta_k) for k in {3,4,6}, where zeta_k = e^{2*pi*i/k}.
// Elements are stored as a + b*zeta_k with arbitrary-precision rational a, b.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace convtile {

using Rat = mpq_class;
using Int = mpz_class;

namespace detail {

// zeta_k^2 = red0(k) + red1(k)*zeta_k
inline int red0(int k) {
    switch (k) {
        case 3: return -1;   // z^2 = -1 - z
        case 4: return -1;   // z^2 = -1
        case 6: return -1;   // z^2 = -1 + z
        default: throw std::invalid_argument("cyclotomic index must be 3, 4 or 6");
    }
}

inline int red1(int k) {
    switch (k) {
        case 3: return -1;
        case 4: return 0;
        case 6: return 1;
        default: throw std::invalid_argument("cyclotomic index must be 3, 4 or 6");
    }
}

// 2*Re(zeta_k), always an integer for k in {3,4,6}.
inline int trace_zeta(int k) {
    switch (k) {
        case 3: return -1;
        case 4: return 0;
        case 6: return 1;
        default: throw std::invalid_argument("cyclotomic index must be 3, 4 or 6");
    }
}

}  // namespace detail

// An element a + b*zeta_k of Q(zeta_k). The (a,b) form is canonical: the
// reduction zeta^2 -> red0 + red1*zeta is applied inside every product.
class Cyc {
public:
    Cyc() : k_(4), a_(0), b_(0) {}

    Cyc(int k, Rat a, Rat b) : k_(k), a_(std::move(a)), b_(std::move(b)) {
        detail::red0(k_);  // validates k
        a_.canonicalize();
        b_.canonicalize();
    }

    static Cyc zero(int k) { return Cyc(k, 0, 0); }
    static Cyc one(int k) { return Cyc(k, 1, 0); }
    static Cyc zeta(int k) { return Cyc(k, 0, 1); }
    static Cyc from_rat(int k, const Rat& a) { return Cyc(k, a, 0); }

    int k() const { return k_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    bool operator==(const Cyc& o) const { return k_ == o.k_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc operator+(const Cyc& o) const {
        check_same_field(o);
        return Cyc(k_, a_ + o.a_, b_ + o.b_);
    }

    Cyc operator-(const Cyc& o) const {
        check_same_field(o);
        return Cyc(k_, a_ - o.a_, b_ - o.b_);
    }

    Cyc operator-() const { return Cyc(k_, -a_, -b_); }

    // (a1 + b1 z)(a2 + b2 z) = a1 a2 + (a1 b2 + a2 b1) z + b1 b2 z^2
    Cyc operator*(const Cyc& o) const {
        check_same_field(o);
        Rat zz = b_ * o.b_;
        return Cyc(k_, a_ * o.a_ + zz * detail::red0(k_),
                   a_ * o.b_ + b_ * o.a_ + zz * detail::red1(k_));
    }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    // Complex conjugate. conj(zeta) = trace - zeta since |zeta| = 1.
    Cyc conj() const {
        return Cyc(k_, a_ + b_ * detail::trace_zeta(k_), -b_);
    }

    // Re(a + b*zeta) = a + b*Re(zeta); rational for k in {3,4,6}.
    Rat re() const {
        Rat half_trace(detail::trace_zeta(k_), 2);
        return a_ + b_ * half_trace;
    }

    // |x|^2 = x * conj(x) = a^2 + a*b*trace + b^2.
    Rat normsq() const {
        return a_ * a_ + a_ * b_ * detail::trace_zeta(k_) + b_ * b_;
    }

    Cyc inv() const {
        if (is_zero()) throw std::domain_error("inversion of zero in Q(zeta_k)");
        Rat n = normsq();
        Cyc c = conj();
        return Cyc(k_, c.a_ / n, c.b_ / n);
    }

    Cyc operator/(const Cyc& o) const { return *this * o.inv(); }

    // Membership in the ring of integers Z[zeta_k].
    bool is_integral() const {
        return a_.get_den() == 1 && b_.get_den() == 1;
    }

    // Serialized as "a+b*z" with exact rational components.
    std::string str() const {
        std::string s = a_.get_str();
        s += (b_ < 0) ? "-" : "+";
        Rat ab = abs(b_);
        s += ab.get_str();
        s += "*z";
        return s;
    }

private:
    void check_same_field(const Cyc& o) const {
        if (k_ != o.k_) throw std::invalid_argument("mixed cyclotomic indices");
    }

    int k_;
    Rat a_, b_;
};

// True iff x/d lies in Z[zeta_k]. Both arguments must already be in the ring.
inline bool ring_divides(const Cyc& d, const Cyc& x) {
    if (d.is_zero()) throw std::domain_error("ring_divides by zero");
    if (!d.is_integral() || !x.is_integral())
        throw std::invalid_argument("ring_divides expects Z[zeta_k] arguments");
    return (x * d.inv()).is_integral();
}

// 1 + zeta_k, the modularity scalar of the star form.
inline Cyc one_plus_zeta(int k) { return Cyc(k, 1, 1); }

// |1+zeta_k|^2 = 1, 2, 3 for k = 3, 4, 6.
inline Rat normsq_one_plus_zeta(int k) { return one_plus_zeta(k).normsq(); }

}  // namespace convtile
