#pragma once

#include "bcx/matrix.hpp"

// The bicomplex tensor product A (x)_j B, computed by two algebraically
// distinct routes that must agree:
//   cartesian:  C1 = A1 (x) B1 - A2 (x) B2,  C2 = A1 (x) B2 + A2 (x) B1
//   idempotent: (C1' , C2') = (A1c (x) B1c , A2c (x) B2c)
// plus the 2x2-block complex representation and tensor-factor recovery.

namespace bcx {

inline Matrix tensor_cartesian(const Matrix& a, const Matrix& b) {
    const CMat a1 = a.cart1(), a2 = a.cart2();
    const CMat b1 = b.cart1(), b2 = b.cart2();
    return Matrix::from_cartesian(linalg::kron(a1, b1) - linalg::kron(a2, b2),
                                  linalg::kron(a1, b2) + linalg::kron(a2, b1));
}

inline Matrix tensor_idempotent(const Matrix& a, const Matrix& b) {
    return Matrix(linalg::kron(a.comp1(), b.comp1()), linalg::kron(a.comp2(), b.comp2()));
}

// The complex 2n x 2m representation [[A1, -A2], [A2, A1]] of A = A1 + j*A2.
inline CMat block_representation(const Matrix& a) {
    const CMat a1 = a.cart1(), a2 = a.cart2();
    CMat out(2 * a.rows(), 2 * a.cols());
    out << a1, -a2, a2, a1;
    return out;
}

struct RecoveredFactors {
    Matrix a;        // n x n, component traces carry trace(M)
    Matrix b;        // m x m, trace-1 components (the gauge choice)
    double residual; // Frobenius distance of the reconstruction from M
};

namespace detail {
// Partial traces of an (n*m) x (n*m) complex matrix: summing the basis
// sandwiches sum_k (e_i (x) f_k)^* M (e_j (x) f_k) gives A(i,j)*tr(B), and
// symmetrically for the m-factor.
inline void kron_partial_traces(const CMat& m, Eigen::Index n, Eigen::Index mm,
                                CMat& a_scaled, CMat& b_scaled) {
    a_scaled = CMat::Zero(n, n);
    b_scaled = CMat::Zero(mm, mm);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index k = 0; k < mm; ++k) {
                a_scaled(i, j) += m(i * mm + k, j * mm + k);
            }
        }
    }
    for (Eigen::Index a = 0; a < mm; ++a) {
        for (Eigen::Index b = 0; b < mm; ++b) {
            for (Eigen::Index k = 0; k < n; ++k) {
                b_scaled(a, b) += m(k * mm + a, k * mm + b);
            }
        }
    }
}
} // namespace detail

// Recovers A (n x n) and B (m x m) from M = A (x)_j B, component-wise. The
// factorization is unique only up to component scalars; the gauge is fixed
// by normalizing each component of B to trace 1, so the component traces
// of A equal those of M. Throws ZeroTrace when a component trace magnitude
// is <= tol and NotProduct when the reconstruction residual exceeds
// tol*(1+||M||_F).
inline RecoveredFactors recover_factors(const Matrix& m, Eigen::Index n, Eigen::Index mm,
                                        double tol = 1e-10) {
    if (n < 1 || mm < 1 || m.rows() != n * mm || m.cols() != n * mm) {
        throw ShapeMismatch("recover_factors: expected a " + std::to_string(n * mm) + "x" +
                            std::to_string(n * mm) + " matrix, got " +
                            detail::shape_str(m.rows(), m.cols()));
    }
    CMat a_comps[2], b_comps[2];
    for (int l = 0; l < 2; ++l) {
        const CMat& comp = l == 0 ? m.comp1() : m.comp2();
        const cplx t = comp.trace();
        if (std::abs(t) <= tol) {
            throw ZeroTrace("component " + std::to_string(l + 1) + " of trace(M) vanishes");
        }
        CMat a_scaled, b_scaled;
        detail::kron_partial_traces(comp, n, mm, a_scaled, b_scaled);
        a_comps[l] = a_scaled;       // = A * tr(B); already the gauge-fixed factor
        b_comps[l] = b_scaled / t;   // trace-1 component
    }
    const Matrix a(a_comps[0], a_comps[1]);
    const Matrix b(b_comps[0], b_comps[1]);
    const double residual = (tensor_idempotent(a, b) - m).frobenius_norm();
    if (residual > tol * (1.0 + m.frobenius_norm())) {
        throw NotProduct("reconstruction residual " + std::to_string(residual) +
                         " exceeds tolerance; M is not a tensor product");
    }
    return {a, b, residual};
}

} // namespace bcx
