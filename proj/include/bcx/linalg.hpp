#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "bcx/errors.hpp"

// Complex kernels shared by both idempotent components. Everything here is
// plain C(i) linear algebra on top of Eigen; the bicomplex structure lives
// in the callers.

namespace bcx::linalg {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Kronecker product, row-major block layout:
// entry ((i*p + a), (j*q + b)) = A(i,j) * B(a,b) for B of shape p x q.
inline CMat kron(const CMat& A, const CMat& B) {
    CMat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        }
    }
    return out;
}

inline double max_abs(const CMat& A) {
    return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMat& A, double tol) {
    if (A.rows() != A.cols()) return false;
    return max_abs(A - A.adjoint()) <= tol * (1.0 + max_abs(A));
}

// Eigenvalues of a Hermitian matrix, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const CMat& A) {
    return Eigen::SelfAdjointEigenSolver<CMat>(A, Eigen::EigenvaluesOnly).eigenvalues();
}

// PSD test with relative slack: lambda_min >= -tol*(1+spectral radius).
inline bool is_psd(const CMat& A, double tol) {
    if (!is_hermitian(A, tol)) return false;
    const Eigen::VectorXd ev = hermitian_eigenvalues(A);
    const double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return ev(0) >= -tol * (1.0 + radius);
}

// Upper-triangular U with A = U^H * U for Hermitian PSD A. Positive
// definite inputs go through LLT; semidefinite ones fall back to the
// eigenvalue square root re-triangularized by QR, which keeps the same
// contract. Returns false when A has an eigenvalue below -tol*(1+radius).
inline bool cholesky_upper(const CMat& A, double tol, CMat& U) {
    Eigen::LLT<CMat> llt(A);
    if (llt.info() == Eigen::Success) {
        U = llt.matrixL().adjoint();
        return true;
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(A);
    Eigen::VectorXd ev = es.eigenvalues();
    const double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    if (ev(0) < -tol * (1.0 + radius)) return false;
    ev = ev.cwiseMax(0.0);
    const CMat M = ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    Eigen::HouseholderQR<CMat> qr(M);
    U = qr.matrixQR().topRows(A.cols()).triangularView<Eigen::Upper>();
    return true;
}

// Smallest/largest singular values; the singularity threshold used across
// the library is sigma_min <= 1e-10 * (sigma_max + 1).
inline void singular_value_range(const CMat& A, double& smin, double& smax) {
    const Eigen::JacobiSVD<CMat> svd(A);
    const auto& sv = svd.singularValues();
    smin = sv(sv.size() - 1);
    smax = sv(0);
}

inline bool is_invertible(const CMat& A, double tol = 1e-10) {
    if (A.rows() != A.cols()) return false;
    double smin = 0.0, smax = 0.0;
    singular_value_range(A, smin, smax);
    return smin > tol * (smax + 1.0);
}

// Standard complex Gaussian entries (re and im each N(0,1)).
inline CMat randn(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMat out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            out(i, j) = std::complex<double>(dist(rng), dist(rng));
        }
    }
    return out;
}

} // namespace bcx::linalg
