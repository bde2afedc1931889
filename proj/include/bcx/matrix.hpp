#pragma once

#include <string>
#include <utility>

#include "bcx/linalg.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

using linalg::CMat;
using linalg::CVec;

namespace detail {
inline std::string shape_str(Eigen::Index r, Eigen::Index c) {
    return std::to_string(r) + "x" + std::to_string(c);
}
} // namespace detail

// A matrix over the bicomplex numbers, stored as the pair of complex
// idempotent components A = C1*e1 + C2*e2. The cartesian pair (A1, A2)
// with A = A1 + j*A2 is a computed view: A1 = (C1+C2)/2, A2 = i*(C1-C2)/2.
class Matrix {
public:
    Matrix() : c1_(0, 0), c2_(0, 0) {}
    Matrix(CMat comp1, CMat comp2) : c1_(std::move(comp1)), c2_(std::move(comp2)) {
        if (c1_.rows() != c2_.rows() || c1_.cols() != c2_.cols()) {
            throw ShapeMismatch("idempotent components differ in shape: " +
                                detail::shape_str(c1_.rows(), c1_.cols()) + " vs " +
                                detail::shape_str(c2_.rows(), c2_.cols()));
        }
    }

    static Matrix from_components(CMat comp1, CMat comp2) {
        return Matrix(std::move(comp1), std::move(comp2));
    }
    // A = A1 + j*A2
    static Matrix from_cartesian(const CMat& a1, const CMat& a2) {
        const cplx iu(0, 1);
        return Matrix(a1 - iu * a2, a1 + iu * a2);
    }
    // Embeds a complex matrix (equal components).
    static Matrix from_complex(const CMat& a) { return Matrix(a, a); }
    static Matrix zero(Eigen::Index rows, Eigen::Index cols) {
        return Matrix(CMat::Zero(rows, cols), CMat::Zero(rows, cols));
    }
    static Matrix identity(Eigen::Index n) {
        return Matrix(CMat::Identity(n, n), CMat::Identity(n, n));
    }

    Eigen::Index rows() const { return c1_.rows(); }
    Eigen::Index cols() const { return c1_.cols(); }
    bool is_square() const { return rows() == cols(); }

    const CMat& comp1() const { return c1_; }
    const CMat& comp2() const { return c2_; }
    CMat cart1() const { return (c1_ + c2_) / 2.0; }
    CMat cart2() const { return cplx(0, 0.5) * (c1_ - c2_); }

    Bicomplex operator()(Eigen::Index i, Eigen::Index j) const {
        return Bicomplex::from_idempotent(c1_(i, j), c2_(i, j));
    }
    void set(Eigen::Index i, Eigen::Index j, Bicomplex z) {
        c1_(i, j) = z.comp1();
        c2_(i, j) = z.comp2();
    }

    Matrix star_transpose() const { return Matrix(c1_.adjoint(), c2_.adjoint()); }

    Bicomplex trace() const {
        require_square("trace");
        return Bicomplex::from_idempotent(c1_.trace(), c2_.trace());
    }

    enum class InverseMethod { Componentwise, Cartesian };

    // Component-wise inverse, or the equivalent cartesian recombination
    // At1 = (inv1+inv2)/2, At2 = -i*(inv2-inv1)/2 with A^-1 = At1 + j*At2.
    Matrix inverse(InverseMethod method = InverseMethod::Componentwise,
                   double tol = 1e-10) const {
        require_square("inverse");
        if (!linalg::is_invertible(c1_, tol)) {
            throw Singular("idempotent component 1 is singular");
        }
        if (!linalg::is_invertible(c2_, tol)) {
            throw Singular("idempotent component 2 is singular");
        }
        const CMat inv1 = c1_.inverse();
        const CMat inv2 = c2_.inverse();
        if (method == InverseMethod::Componentwise) {
            return Matrix(inv1, inv2);
        }
        const CMat at1 = (inv1 + inv2) / 2.0;
        const CMat at2 = cplx(0, -0.5) * (inv2 - inv1);
        return from_cartesian(at1, at2);
    }

    // sqrt(sum of squared entry norms) = sqrt((||C1||_F^2 + ||C2||_F^2)/2)
    double frobenius_norm() const {
        return std::sqrt((c1_.squaredNorm() + c2_.squaredNorm()) / 2.0);
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "add");
        return Matrix(a.c1_ + b.c1_, a.c2_ + b.c2_);
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "subtract");
        return Matrix(a.c1_ - b.c1_, a.c2_ - b.c2_);
    }
    friend Matrix operator-(const Matrix& a) { return Matrix(-a.c1_, -a.c2_); }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols() != b.rows()) {
            throw ShapeMismatch("cannot multiply " + detail::shape_str(a.rows(), a.cols()) +
                                " by " + detail::shape_str(b.rows(), b.cols()));
        }
        return Matrix(a.c1_ * b.c1_, a.c2_ * b.c2_);
    }
    friend Matrix operator*(Bicomplex z, const Matrix& a) {
        return Matrix(z.comp1() * a.c1_, z.comp2() * a.c2_);
    }
    friend Matrix operator*(const Matrix& a, Bicomplex z) { return z * a; }
    friend Matrix operator*(double s, const Matrix& a) { return Matrix(s * a.c1_, s * a.c2_); }
    friend Matrix operator*(const Matrix& a, double s) { return s * a; }

private:
    void require_square(const char* op) const {
        if (!is_square()) {
            throw NotSquare(std::string(op) + " requires a square matrix, got " +
                            detail::shape_str(rows(), cols()));
        }
    }
    void require_same_shape(const Matrix& b, const char* op) const {
        if (rows() != b.rows() || cols() != b.cols()) {
            throw ShapeMismatch(std::string(op) + ": " + detail::shape_str(rows(), cols()) +
                                " vs " + detail::shape_str(b.rows(), b.cols()));
        }
    }

    CMat c1_;
    CMat c2_;
};

// Largest entry distance between two equally shaped matrices, taken over
// both idempotent components.
inline double max_entry_dist(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch("max_entry_dist: " + detail::shape_str(a.rows(), a.cols()) +
                            " vs " + detail::shape_str(b.rows(), b.cols()));
    }
    return std::max(linalg::max_abs(a.comp1() - b.comp1()),
                    linalg::max_abs(a.comp2() - b.comp2()));
}

// A vector over the bicomplex numbers, X = V1*e1 + V2*e2.
class Vector {
public:
    Vector() : v1_(0), v2_(0) {}
    Vector(CVec comp1, CVec comp2) : v1_(std::move(comp1)), v2_(std::move(comp2)) {
        if (v1_.size() != v2_.size()) {
            throw ShapeMismatch("idempotent components differ in length: " +
                                std::to_string(v1_.size()) + " vs " + std::to_string(v2_.size()));
        }
    }

    static Vector zero(Eigen::Index n) { return Vector(CVec::Zero(n), CVec::Zero(n)); }
    static Vector from_components(CVec comp1, CVec comp2) {
        return Vector(std::move(comp1), std::move(comp2));
    }

    Eigen::Index size() const { return v1_.size(); }
    const CVec& comp1() const { return v1_; }
    const CVec& comp2() const { return v2_; }

    Bicomplex operator()(Eigen::Index i) const {
        return Bicomplex::from_idempotent(v1_(i), v2_(i));
    }
    void set(Eigen::Index i, Bicomplex z) {
        v1_(i) = z.comp1();
        v2_(i) = z.comp2();
    }

    Vector star() const { return Vector(v1_.conjugate(), v2_.conjugate()); }

    Matrix as_column() const { return Matrix(v1_, v2_); }
    static Vector from_column(const Matrix& m) {
        if (m.cols() != 1) {
            throw ShapeMismatch("expected a column matrix, got " +
                                detail::shape_str(m.rows(), m.cols()));
        }
        return Vector(m.comp1().col(0), m.comp2().col(0));
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        if (a.size() != b.size()) throw ShapeMismatch("vector add: length mismatch");
        return Vector(a.v1_ + b.v1_, a.v2_ + b.v2_);
    }
    friend Vector operator-(const Vector& a, const Vector& b) {
        if (a.size() != b.size()) throw ShapeMismatch("vector subtract: length mismatch");
        return Vector(a.v1_ - b.v1_, a.v2_ - b.v2_);
    }
    friend Vector operator*(Bicomplex z, const Vector& a) {
        return Vector(z.comp1() * a.v1_, z.comp2() * a.v2_);
    }
    friend Vector operator*(const Matrix& m, const Vector& x) {
        if (m.cols() != x.size()) {
            throw ShapeMismatch("matvec: " + detail::shape_str(m.rows(), m.cols()) +
                                " times length " + std::to_string(x.size()));
        }
        return Vector(m.comp1() * x.v1_, m.comp2() * x.v2_);
    }

private:
    CVec v1_;
    CVec v2_;
};

// D-valued inner product <X,Y> = <X1,Y1>*e1 + <X2,Y2>*e2 built from the
// usual Hermitian inner products (conjugate-linear in the first argument).
// For X = Y the value is hyperbolic and lies in D+.
inline Bicomplex inner_product(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) {
        throw ShapeMismatch("inner_product: lengths " + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()));
    }
    return Bicomplex::from_idempotent(x.comp1().dot(y.comp1()), x.comp2().dot(y.comp2()));
}

// ||X||_{D+} = ||X1||*e1 + ||X2||*e2
inline Hyperbolic d_vector_norm(const Vector& x) {
    return Hyperbolic::from_idempotent(x.comp1().norm(), x.comp2().norm());
}

} // namespace bcx
