#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bcx/matrix.hpp"

// Hyperbolic positivity of bicomplex matrices. A is hyperbolic positive
// when (c^*)^t A c lands in D+ for every bicomplex vector c; equivalently
// both idempotent components are complex PSD matrices. Three independent
// test routes are kept side by side.

namespace bcx {

// Unpaired component spectra of a square bicomplex matrix. D+ membership
// of the "bicomplex eigenvalues" only constrains each component spectrum,
// so no pairing between the two lists is imposed.
struct EigenPairList {
    std::vector<cplx> spectrum1;
    std::vector<cplx> spectrum2;
};

enum class PositivityMethod { Components, Cartesian, Eigenvalues };

// (c^*)^t * A * c; hyperbolic with nonnegative components whenever A is
// hyperbolic positive, and a non-membership witness otherwise.
inline Bicomplex quadratic_form(const Matrix& a, const Vector& c) {
    if (!a.is_square()) {
        throw NotSquare("quadratic_form requires a square matrix");
    }
    if (a.cols() != c.size()) {
        throw ShapeMismatch("quadratic_form: matrix is " +
                            detail::shape_str(a.rows(), a.cols()) + ", vector has length " +
                            std::to_string(c.size()));
    }
    return Bicomplex::from_idempotent(c.comp1().dot(a.comp1() * c.comp1()),
                                      c.comp2().dot(a.comp2() * c.comp2()));
}

inline bool is_hyperbolic_positive(const Matrix& a, double tol = 1e-10,
                                   PositivityMethod method = PositivityMethod::Components) {
    if (!a.is_square()) {
        throw NotSquare("is_hyperbolic_positive requires a square matrix");
    }
    switch (method) {
    case PositivityMethod::Components:
        return linalg::is_psd(a.comp1(), tol) && linalg::is_psd(a.comp2(), tol);
    case PositivityMethod::Cartesian: {
        // A1 >= 0, A2 skew self-adjoint, and -A1 <= i*A2 <= A1.
        const CMat a1 = a.cart1();
        const CMat a2 = a.cart2();
        if (!linalg::is_psd(a1, tol)) return false;
        if (linalg::max_abs(a2 + a2.adjoint()) > tol * (1.0 + linalg::max_abs(a2))) return false;
        const CMat ia2 = cplx(0, 1) * a2;
        return linalg::is_psd(a1 - ia2, tol) && linalg::is_psd(a1 + ia2, tol);
    }
    case PositivityMethod::Eigenvalues: {
        // Hermiticity is verified, not assumed; then both component spectra
        // (general eigensolver) must be real and >= -tol, scaled.
        for (const CMat* comp : {&a.comp1(), &a.comp2()}) {
            if (!linalg::is_hermitian(*comp, tol)) return false;
            const Eigen::ComplexEigenSolver<CMat> es(*comp, false);
            const CVec ev = es.eigenvalues();
            const double radius = ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
            const double slack = tol * (1.0 + radius);
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                if (std::abs(ev(i).imag()) > slack || ev(i).real() < -slack) return false;
            }
        }
        return true;
    }
    }
    return false; // unreachable
}

// Gram instance B^{*t} B with an (rank x n) Gaussian factor per component;
// hyperbolic positive and *-Hermitian by construction.
inline Matrix random_gram(Eigen::Index n, Eigen::Index rank, std::uint64_t seed) {
    if (rank < 1 || rank > n) {
        throw BadFactorization("random_gram: rank must lie in [1, n]");
    }
    std::mt19937_64 rng(seed);
    const Matrix b(linalg::randn(rank, n, rng), linalg::randn(rank, n, rng));
    return b.star_transpose() * b;
}

enum class Triangle { Upper, Lower };

namespace detail {
inline CMat reversal(Eigen::Index n) {
    CMat j = CMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return j;
}
} // namespace detail

// Triangular U with A = U^{*t} U, component-wise complex Cholesky. The
// lower variant runs the same routine on the reversed ordering J*A*J.
inline Matrix cholesky(const Matrix& a, double tol = 1e-10,
                       Triangle shape = Triangle::Upper) {
    if (!a.is_square()) throw NotSquare("cholesky requires a square matrix");
    if (!is_hyperbolic_positive(a, tol)) {
        throw NotPositive("cholesky requires a hyperbolic positive matrix");
    }
    const Eigen::Index n = a.rows();
    const CMat rev = detail::reversal(n);
    CMat factors[2];
    const CMat* comps[2] = {&a.comp1(), &a.comp2()};
    for (int l = 0; l < 2; ++l) {
        const CMat target = shape == Triangle::Upper ? *comps[l] : CMat(rev * *comps[l] * rev);
        CMat u;
        if (!linalg::cholesky_upper(target, tol, u)) {
            throw NotPositive("component " + std::to_string(l + 1) + " is not PSD");
        }
        factors[l] = shape == Triangle::Upper ? u : CMat(rev * u * rev);
    }
    return Matrix(factors[0], factors[1]);
}

// A = sum_i a_i a_i^{*t} with pairwise orthogonal vectors, built from the
// component eigendecompositions. The component of smaller rank is padded
// with zero vectors so both sums share r = max(rank C1, rank C2).
inline std::vector<Vector> rank_one_decomposition(const Matrix& a, double tol = 1e-10) {
    if (!a.is_square()) throw NotSquare("rank_one_decomposition requires a square matrix");
    if (!is_hyperbolic_positive(a, tol)) {
        throw NotPositive("rank_one_decomposition requires a hyperbolic positive matrix");
    }
    const Eigen::Index n = a.rows();
    std::vector<CVec> comp_vecs[2];
    const CMat* comps[2] = {&a.comp1(), &a.comp2()};
    for (int l = 0; l < 2; ++l) {
        const Eigen::SelfAdjointEigenSolver<CMat> es(*comps[l]);
        const Eigen::VectorXd ev = es.eigenvalues();
        const double radius =
            std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
        const double cutoff = tol * (1.0 + radius);
        for (Eigen::Index i = ev.size() - 1; i >= 0; --i) { // descending
            if (ev(i) > cutoff) {
                comp_vecs[l].push_back(std::sqrt(ev(i)) * es.eigenvectors().col(i));
            }
        }
    }
    const std::size_t r = std::max(comp_vecs[0].size(), comp_vecs[1].size());
    std::vector<Vector> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        const CVec b = i < comp_vecs[0].size() ? comp_vecs[0][i] : CVec(CVec::Zero(n));
        const CVec c = i < comp_vecs[1].size() ? comp_vecs[1][i] : CVec(CVec::Zero(n));
        out.emplace_back(b, c);
    }
    return out;
}

// State = hyperbolic positive with trace 1 (both component traces 1).
inline bool is_state(const Matrix& a, double tol = 1e-10) {
    if (!a.is_square()) throw NotSquare("is_state requires a square matrix");
    if (!is_hyperbolic_positive(a, tol)) return false;
    return (a.trace() - Bicomplex(1.0)).euclidean_norm() <= tol;
}

inline EigenPairList bc_eigenvalues(const Matrix& a) {
    if (!a.is_square()) throw NotSquare("bc_eigenvalues requires a square matrix");
    EigenPairList out;
    for (int l = 0; l < 2; ++l) {
        const CMat& comp = l == 0 ? a.comp1() : a.comp2();
        const Eigen::ComplexEigenSolver<CMat> es(comp, false);
        auto& spectrum = l == 0 ? out.spectrum1 : out.spectrum2;
        spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + comp.rows());
    }
    return out;
}

} // namespace bcx
