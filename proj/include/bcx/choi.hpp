#pragma once

#include <string>
#include <vector>

#include "bcx/matrix.hpp"
#include "bcx/positivity.hpp"
#include "bcx/tensor.hpp"

// Bicomplex completely positive maps. A linear map on BC^{n x n} splits as
// phi(A) = phi1(A1c)*e1 + phi2(A2c)*e2 into two complex maps; phi is CP
// exactly when both component Choi matrices are PSD, and every CP map is a
// finite Kraus sum phi(A) = sum_i V_i A (V_i^*)^t.

namespace bcx {

// A finite family of m x n bicomplex operators V_1..V_r.
struct KrausSet {
    Eigen::Index n = 0; // domain side
    Eigen::Index m = 0; // codomain side
    std::vector<Matrix> operators;

    KrausSet() = default;
    KrausSet(Eigen::Index n_, Eigen::Index m_, std::vector<Matrix> ops)
        : n(n_), m(m_), operators(std::move(ops)) {
        if (operators.empty()) {
            throw ShapeMismatch("a Kraus set needs at least one operator");
        }
        for (const Matrix& v : operators) {
            if (v.rows() != m || v.cols() != n) {
                throw ShapeMismatch("Kraus operator has shape " +
                                    detail::shape_str(v.rows(), v.cols()) + ", expected " +
                                    detail::shape_str(m, n));
            }
        }
    }
};

// A linear map BC^{n x n} -> BC^{m x m} represented by its images of the
// matrix units E_jk per idempotent component, row-major in (j,k). The map
// is the unique linear extension of those images.
class MatrixMap {
public:
    MatrixMap(Eigen::Index n, Eigen::Index m, std::vector<CMat> images1,
              std::vector<CMat> images2)
        : n_(n), m_(m), images1_(std::move(images1)), images2_(std::move(images2)) {
        const auto count = static_cast<std::size_t>(n_ * n_);
        if (images1_.size() != count || images2_.size() != count) {
            throw ShapeMismatch("expected " + std::to_string(count) +
                                " unit images per component");
        }
        for (const auto* images : {&images1_, &images2_}) {
            for (const CMat& img : *images) {
                if (img.rows() != m_ || img.cols() != m_) {
                    throw ShapeMismatch("unit image has shape " +
                                        detail::shape_str(img.rows(), img.cols()) +
                                        ", expected " + detail::shape_str(m_, m_));
                }
            }
        }
    }

    static MatrixMap identity(Eigen::Index n) {
        std::vector<CMat> images(static_cast<std::size_t>(n * n));
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index k = 0; k < n; ++k) {
                CMat unit = CMat::Zero(n, n);
                unit(j, k) = 1.0;
                images[static_cast<std::size_t>(j * n + k)] = unit;
            }
        }
        return MatrixMap(n, n, images, images);
    }

    Eigen::Index n() const { return n_; }
    Eigen::Index m() const { return m_; }

    const CMat& image1(Eigen::Index j, Eigen::Index k) const {
        return images1_[static_cast<std::size_t>(j * n_ + k)];
    }
    const CMat& image2(Eigen::Index j, Eigen::Index k) const {
        return images2_[static_cast<std::size_t>(j * n_ + k)];
    }
    const std::vector<CMat>& images1() const { return images1_; }
    const std::vector<CMat>& images2() const { return images2_; }

private:
    Eigen::Index n_;
    Eigen::Index m_;
    std::vector<CMat> images1_;
    std::vector<CMat> images2_;
};

using ChoiMatrix = Matrix;

namespace detail {
// Linear extension of one component: X (n x n complex) -> sum X(j,k)*phi(E_jk).
inline CMat apply_component(const MatrixMap& phi, int component, const CMat& x) {
    CMat out = CMat::Zero(phi.m(), phi.m());
    for (Eigen::Index j = 0; j < phi.n(); ++j) {
        for (Eigen::Index k = 0; k < phi.n(); ++k) {
            const CMat& img = component == 0 ? phi.image1(j, k) : phi.image2(j, k);
            out += x(j, k) * img;
        }
    }
    return out;
}
} // namespace detail

// phi(A) = sum_i V_i A (V_i^*)^t. On matrix units this is the sum of
// column outer products v_j v_k^H per component.
inline MatrixMap map_from_kraus(const KrausSet& kraus) {
    const auto count = static_cast<std::size_t>(kraus.n * kraus.n);
    std::vector<CMat> images1(count), images2(count);
    for (Eigen::Index j = 0; j < kraus.n; ++j) {
        for (Eigen::Index k = 0; k < kraus.n; ++k) {
            CMat img1 = CMat::Zero(kraus.m, kraus.m);
            CMat img2 = CMat::Zero(kraus.m, kraus.m);
            for (const Matrix& v : kraus.operators) {
                img1 += v.comp1().col(j) * v.comp1().col(k).adjoint();
                img2 += v.comp2().col(j) * v.comp2().col(k).adjoint();
            }
            images1[static_cast<std::size_t>(j * kraus.n + k)] = img1;
            images2[static_cast<std::size_t>(j * kraus.n + k)] = img2;
        }
    }
    return MatrixMap(kraus.n, kraus.m, std::move(images1), std::move(images2));
}

inline Matrix apply_map(const MatrixMap& phi, const Matrix& a) {
    if (a.rows() != phi.n() || a.cols() != phi.n()) {
        throw ShapeMismatch("apply_map: expected a " + detail::shape_str(phi.n(), phi.n()) +
                            " matrix, got " + detail::shape_str(a.rows(), a.cols()));
    }
    return Matrix(detail::apply_component(phi, 0, a.comp1()),
                  detail::apply_component(phi, 1, a.comp2()));
}

// phi_N: applies phi to each n x n block of an (N*n) x (N*n) matrix.
inline Matrix block_apply(const MatrixMap& phi, const Matrix& a) {
    const Eigen::Index n = phi.n(), m = phi.m();
    if (!a.is_square() || a.rows() % n != 0) {
        throw ShapeMismatch("block_apply: " + detail::shape_str(a.rows(), a.cols()) +
                            " is not square with block size " + std::to_string(n));
    }
    const Eigen::Index big = a.rows() / n;
    CMat out1 = CMat::Zero(big * m, big * m);
    CMat out2 = CMat::Zero(big * m, big * m);
    for (Eigen::Index bj = 0; bj < big; ++bj) {
        for (Eigen::Index bk = 0; bk < big; ++bk) {
            out1.block(bj * m, bk * m, m, m) =
                detail::apply_component(phi, 0, a.comp1().block(bj * n, bk * n, n, n));
            out2.block(bj * m, bk * m, m, m) =
                detail::apply_component(phi, 1, a.comp2().block(bj * n, bk * n, n, n));
        }
    }
    return Matrix(std::move(out1), std::move(out2));
}

// sum_jk E_jk (x) phi(E_jk) per component, with the same row-major block
// layout as the tensor product: block (j,k) of size m x m is phi(E_jk).
inline ChoiMatrix choi_matrix(const MatrixMap& phi) {
    const Eigen::Index n = phi.n(), m = phi.m();
    CMat choi1 = CMat::Zero(n * m, n * m);
    CMat choi2 = CMat::Zero(n * m, n * m);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            choi1.block(j * m, k * m, m, m) = phi.image1(j, k);
            choi2.block(j * m, k * m, m, m) = phi.image2(j, k);
        }
    }
    return Matrix(std::move(choi1), std::move(choi2));
}

// CP iff both component Choi matrices are Hermitian PSD.
inline bool is_completely_positive(const MatrixMap& phi, double tol = 1e-10) {
    const ChoiMatrix choi = choi_matrix(phi);
    return linalg::is_psd(choi.comp1(), tol) && linalg::is_psd(choi.comp2(), tol);
}

// Kraus operators from the component Choi eigendecompositions: every
// eigenvector with eigenvalue above the cutoff, scaled by sqrt(eigenvalue),
// reshapes to an operator via entry [a,j] <- vec[j*m + a]. The component
// lists are zero-padded to a common length r. The output is one valid
// Kraus family among many.
inline KrausSet kraus_decomposition(const MatrixMap& phi, double tol = 1e-10) {
    const Eigen::Index n = phi.n(), m = phi.m();
    const ChoiMatrix choi = choi_matrix(phi);
    std::vector<CMat> ops[2];
    for (int l = 0; l < 2; ++l) {
        const CMat& comp = l == 0 ? choi.comp1() : choi.comp2();
        if (!linalg::is_hermitian(comp, tol)) {
            throw NotCP("component " + std::to_string(l + 1) + " Choi matrix is not Hermitian");
        }
        const Eigen::SelfAdjointEigenSolver<CMat> es(comp);
        const Eigen::VectorXd ev = es.eigenvalues();
        const double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
        const double cutoff = tol * (1.0 + radius);
        if (ev(0) < -cutoff) {
            throw NotCP("component " + std::to_string(l + 1) +
                        " Choi matrix has a negative eigenvalue");
        }
        for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
            if (ev(i) <= cutoff) break; // ascending order: the rest are smaller
            const CVec scaled = std::sqrt(ev(i)) * es.eigenvectors().col(i);
            CMat op(m, n);
            for (Eigen::Index j = 0; j < n; ++j) {
                for (Eigen::Index a = 0; a < m; ++a) {
                    op(a, j) = scaled(j * m + a);
                }
            }
            ops[l].push_back(std::move(op));
        }
    }
    const std::size_t r = std::max<std::size_t>({ops[0].size(), ops[1].size(), 1});
    std::vector<Matrix> operators;
    operators.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        const CMat u = i < ops[0].size() ? ops[0][i] : CMat(CMat::Zero(m, n));
        const CMat w = i < ops[1].size() ? ops[1][i] : CMat(CMat::Zero(m, n));
        operators.emplace_back(u, w);
    }
    return KrausSet(n, m, std::move(operators));
}

// Trace preserving: trace(phi(E_jk)) = delta_jk per component. With a
// Kraus form this is sum_i V_i^{*t} V_i = I_n.
inline bool is_trace_preserving(const MatrixMap& phi, double tol = 1e-10) {
    for (Eigen::Index j = 0; j < phi.n(); ++j) {
        for (Eigen::Index k = 0; k < phi.n(); ++k) {
            const cplx expected = j == k ? 1.0 : 0.0;
            if (std::abs(phi.image1(j, k).trace() - expected) > tol) return false;
            if (std::abs(phi.image2(j, k).trace() - expected) > tol) return false;
        }
    }
    return true;
}

// (phi (x) psi) acting on BC^{n1*n2 x n1*n2}: the image of the composite
// unit E_{(j1 j2),(k1 k2)} is phi(E_{j1 k1}) (x) psi(E_{j2 k2}) per
// component. For Kraus maps this is the map of {V_i (x)_j W_j}.
inline MatrixMap tensor_maps(const MatrixMap& phi, const MatrixMap& psi) {
    const Eigen::Index n = phi.n() * psi.n();
    const Eigen::Index m = phi.m() * psi.m();
    const auto count = static_cast<std::size_t>(n * n);
    std::vector<CMat> images1(count), images2(count);
    for (Eigen::Index j1 = 0; j1 < phi.n(); ++j1) {
        for (Eigen::Index j2 = 0; j2 < psi.n(); ++j2) {
            for (Eigen::Index k1 = 0; k1 < phi.n(); ++k1) {
                for (Eigen::Index k2 = 0; k2 < psi.n(); ++k2) {
                    const Eigen::Index j = j1 * psi.n() + j2;
                    const Eigen::Index k = k1 * psi.n() + k2;
                    images1[static_cast<std::size_t>(j * n + k)] =
                        linalg::kron(phi.image1(j1, k1), psi.image1(j2, k2));
                    images2[static_cast<std::size_t>(j * n + k)] =
                        linalg::kron(phi.image2(j1, k1), psi.image2(j2, k2));
                }
            }
        }
    }
    return MatrixMap(n, m, std::move(images1), std::move(images2));
}

// Composition by unit-image chaining: (after . before)(E_jk) = after(before(E_jk)).
inline MatrixMap compose(const MatrixMap& after, const MatrixMap& before) {
    if (after.n() != before.m()) {
        throw ShapeMismatch("compose: inner dimensions " + std::to_string(before.m()) +
                            " vs " + std::to_string(after.n()));
    }
    const auto count = static_cast<std::size_t>(before.n() * before.n());
    std::vector<CMat> images1(count), images2(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        images1[idx] = detail::apply_component(after, 0, before.images1()[idx]);
        images2[idx] = detail::apply_component(after, 1, before.images2()[idx]);
    }
    return MatrixMap(before.n(), after.m(), std::move(images1), std::move(images2));
}

} // namespace bcx
