#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "bcx/errors.hpp"

namespace bcx {

using cplx = std::complex<double>;

class Bicomplex;
class Hyperbolic;

// A hyperbolic number z = x + k*y (k^2 = 1), stored by its idempotent
// coordinates z = s*e1 + t*e2 with s = x + y, t = x - y. The nonnegative
// cone D+ = { s,t >= 0 } induces the partial order used throughout.
class Hyperbolic {
public:
    constexpr Hyperbolic() = default;
    constexpr Hyperbolic(double real) : s_(real), t_(real) {} // NOLINT: embeds R

    static constexpr Hyperbolic from_idempotent(double s, double t) {
        Hyperbolic h;
        h.s_ = s;
        h.t_ = t;
        return h;
    }
    static constexpr Hyperbolic from_cartesian(double x, double y) {
        return from_idempotent(x + y, x - y);
    }

    constexpr double s() const { return s_; }
    constexpr double t() const { return t_; }
    constexpr double x() const { return (s_ + t_) / 2.0; }
    constexpr double y() const { return (s_ - t_) / 2.0; }

    // z * z^diamond = x^2 - y^2 = s*t
    constexpr double modulus_sq() const { return s_ * t_; }

    constexpr Hyperbolic conj() const { return from_idempotent(t_, s_); } // x - k*y

    friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
        return from_idempotent(a.s_ + b.s_, a.t_ + b.t_);
    }
    friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) {
        return from_idempotent(a.s_ - b.s_, a.t_ - b.t_);
    }
    friend constexpr Hyperbolic operator-(Hyperbolic a) {
        return from_idempotent(-a.s_, -a.t_);
    }
    friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
        return from_idempotent(a.s_ * b.s_, a.t_ * b.t_);
    }

    friend std::ostream& operator<<(std::ostream& os, Hyperbolic h) {
        return os << h.s() << "*e1 + " << h.t() << "*e2";
    }

private:
    double s_ = 0.0;
    double t_ = 0.0;
};

// Membership in D+ with additive tolerance on the idempotent coordinates;
// boundary points count as members.
inline bool d_plus_contains(Hyperbolic h, double tol = 1e-12) {
    return h.s() >= -tol && h.t() >= -tol;
}

// a <= b in the partial order iff b - a lies in D+.
inline bool d_leq(Hyperbolic a, Hyperbolic b, double tol = 1e-12) {
    return d_plus_contains(b - a, tol);
}

// A bicomplex number Z = x1 + i*x2 + j*x3 + k*x4 = z1 + j*z2 with the two
// commuting imaginary units i, j and k = i*j. Canonical storage is the
// idempotent pair (l1, l2) with Z = l1*e1 + l2*e2, l1 = z1 - i*z2,
// l2 = z1 + i*z2; multiplication, inversion and every positivity statement
// act component-wise there. Cartesian coefficients are computed views.
class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double real) : l1_(real), l2_(real) {} // NOLINT: embeds R
    constexpr Bicomplex(cplx z) : l1_(z), l2_(z) {}            // NOLINT: embeds C(i)

    static constexpr Bicomplex from_idempotent(cplx l1, cplx l2) {
        Bicomplex z;
        z.l1_ = l1;
        z.l2_ = l2;
        return z;
    }
    // Z = z1 + j*z2
    static constexpr Bicomplex from_complex_pair(cplx z1, cplx z2) {
        return from_idempotent(z1 - cplx(0, 1) * z2, z1 + cplx(0, 1) * z2);
    }
    static constexpr Bicomplex from_cartesian(double x1, double x2, double x3, double x4) {
        return from_idempotent(cplx(x1 + x4, x2 - x3), cplx(x1 - x4, x2 + x3));
    }
    constexpr Bicomplex(Hyperbolic h) // NOLINT: embeds D, so x2 = x3 = 0
        : l1_(h.s()), l2_(h.t()) {}

    // Idempotent components (the split Z = comp1*e1 + comp2*e2).
    constexpr cplx comp1() const { return l1_; }
    constexpr cplx comp2() const { return l2_; }

    constexpr cplx z1() const { return (l1_ + l2_) / 2.0; }
    constexpr cplx z2() const { return cplx(0, 1) * (l1_ - l2_) / 2.0; }
    constexpr double x1() const { return z1().real(); }
    constexpr double x2() const { return z1().imag(); }
    constexpr double x3() const { return z2().real(); }
    constexpr double x4() const { return z2().imag(); }

    // The three conjugations. In the idempotent view: bar swaps and
    // conjugates the components, dagger swaps them, star conjugates each
    // in place (so star fixes e1 and e2).
    constexpr Bicomplex bar() const { return from_idempotent(std::conj(l2_), std::conj(l1_)); }
    constexpr Bicomplex dagger() const { return from_idempotent(l2_, l1_); }
    constexpr Bicomplex star() const { return from_idempotent(std::conj(l1_), std::conj(l2_)); }

    // ||Z|| = sqrt(x1^2+..+x4^2) = sqrt((|l1|^2+|l2|^2)/2)
    double euclidean_norm() const {
        return std::sqrt((std::norm(l1_) + std::norm(l2_)) / 2.0);
    }

    // Hyperbolic-valued norm |l1|*e1 + |l2|*e2, always in D+.
    Hyperbolic d_norm() const {
        return Hyperbolic::from_idempotent(std::abs(l1_), std::abs(l2_));
    }

    // True when both idempotent components are real within tol (scaled by
    // the magnitude of Z), i.e. Z lies in the hyperbolic subalgebra.
    bool is_hyperbolic(double tol = 1e-12) const {
        const double scale = 1.0 + euclidean_norm();
        return std::abs(l1_.imag()) <= tol * scale && std::abs(l2_.imag()) <= tol * scale;
    }

    // The hyperbolic number with the same real idempotent coordinates.
    constexpr Hyperbolic hyperbolic_part() const {
        return Hyperbolic::from_idempotent(l1_.real(), l2_.real());
    }

    // Component-wise reciprocal. Z is a zero divisor (not invertible) when
    // either component modulus is <= tol*(1+||Z||).
    Bicomplex inverse(double tol = 1e-12) const {
        const double scale = tol * (1.0 + euclidean_norm());
        if (std::abs(l1_) <= scale || std::abs(l2_) <= scale) {
            throw ZeroDivisor("bicomplex number has a vanishing idempotent component");
        }
        return from_idempotent(1.0 / l1_, 1.0 / l2_);
    }

    friend constexpr Bicomplex operator+(Bicomplex a, Bicomplex b) {
        return from_idempotent(a.l1_ + b.l1_, a.l2_ + b.l2_);
    }
    friend constexpr Bicomplex operator-(Bicomplex a, Bicomplex b) {
        return from_idempotent(a.l1_ - b.l1_, a.l2_ - b.l2_);
    }
    friend constexpr Bicomplex operator-(Bicomplex a) {
        return from_idempotent(-a.l1_, -a.l2_);
    }
    friend constexpr Bicomplex operator*(Bicomplex a, Bicomplex b) {
        return from_idempotent(a.l1_ * b.l1_, a.l2_ * b.l2_);
    }
    friend constexpr Bicomplex operator*(double a, Bicomplex b) {
        return from_idempotent(a * b.l1_, a * b.l2_);
    }
    friend constexpr Bicomplex operator*(Bicomplex a, double b) { return b * a; }

    Bicomplex& operator+=(Bicomplex b) { return *this = *this + b; }
    Bicomplex& operator-=(Bicomplex b) { return *this = *this - b; }
    Bicomplex& operator*=(Bicomplex b) { return *this = *this * b; }

    friend std::ostream& operator<<(std::ostream& os, Bicomplex z) {
        return os << "(" << z.l1_ << ")*e1 + (" << z.l2_ << ")*e2";
    }

private:
    cplx l1_;
    cplx l2_;
};

enum class Conj { Bar, Dagger, Star };

inline Bicomplex conjugate(Bicomplex z, Conj kind) {
    switch (kind) {
    case Conj::Bar: return z.bar();
    case Conj::Dagger: return z.dagger();
    case Conj::Star: return z.star();
    }
    return z; // unreachable
}

// Distinguished elements. e1*e2 = 0, e1+e2 = 1, e1-e2 = k.
inline constexpr Bicomplex e1 = Bicomplex::from_idempotent(1.0, 0.0);
inline constexpr Bicomplex e2 = Bicomplex::from_idempotent(0.0, 1.0);
inline constexpr Bicomplex unit_i = Bicomplex::from_cartesian(0, 1, 0, 0);
inline constexpr Bicomplex unit_j = Bicomplex::from_cartesian(0, 0, 1, 0);
inline constexpr Bicomplex unit_k = Bicomplex::from_cartesian(0, 0, 0, 1);

} // namespace bcx
