#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bcx/matrix.hpp"
#include "bcx/tensor.hpp"

// Tensor-factored matrix-vector products. When C = A (x)_j B with A of
// size s x s and B of size r x r, Y = C*X can be evaluated as
//   Y = P_{n,s} (I_r (x) A) P_{n,r} (I_s (x) B) X,      n = r*s,
// touching s*r^2 + r*s^2 complex multiplications per idempotent component
// instead of (r*s)^2 for the materialized product.

namespace bcx {

// Multiplication/addition tallies, indexed by idempotent component.
struct OpCounter {
    std::array<std::uint64_t, 2> complex_mults{0, 0};
    std::array<std::uint64_t, 2> complex_adds{0, 0};
};

// The commutation permutation P_{n,s}: P(w (x) u) = u (x) w for u of
// length s and w of length n/s. Index form: y[b*(n/s) + a] = x[a*s + b].
class StridePermutation {
public:
    StridePermutation(Eigen::Index n, Eigen::Index s) : n_(n), s_(s) {
        if (n < 1 || s < 1 || n % s != 0) {
            throw BadFactorization("stride permutation needs s | n, got n=" +
                                   std::to_string(n) + ", s=" + std::to_string(s));
        }
        const Eigen::Index r = n / s;
        map_.resize(static_cast<std::size_t>(n));
        for (Eigen::Index a = 0; a < r; ++a) {
            for (Eigen::Index b = 0; b < s; ++b) {
                map_[static_cast<std::size_t>(b * r + a)] = a * s + b;
            }
        }
    }

    Eigen::Index n() const { return n_; }
    Eigen::Index s() const { return s_; }
    // map()[out] = in, i.e. y[out] = x[map()[out]].
    const std::vector<Eigen::Index>& map() const { return map_; }

    CVec apply(const CVec& x) const {
        CVec y(n_);
        for (Eigen::Index i = 0; i < n_; ++i) y(i) = x(map_[static_cast<std::size_t>(i)]);
        return y;
    }
    Vector apply(const Vector& x) const {
        return Vector(apply(x.comp1()), apply(x.comp2()));
    }

private:
    Eigen::Index n_;
    Eigen::Index s_;
    std::vector<Eigen::Index> map_;
};

inline StridePermutation stride_permutation(Eigen::Index n, Eigen::Index s) {
    return StridePermutation(n, s);
}

namespace detail {
// Plain matvec with operation tallies: rows*cols multiplications,
// rows*(cols-1) additions. No skips for special entries.
inline CVec counting_matvec(const CMat& m, const CVec& x, std::uint64_t& mults,
                            std::uint64_t& adds) {
    CVec y = m * x;
    mults += static_cast<std::uint64_t>(m.rows()) * static_cast<std::uint64_t>(m.cols());
    if (m.cols() > 0) {
        adds += static_cast<std::uint64_t>(m.rows()) * static_cast<std::uint64_t>(m.cols() - 1);
    }
    return y;
}

inline void require_factored_shapes(const Matrix& a, const Matrix& b, const Vector& x) {
    if (!a.is_square() || !b.is_square()) {
        throw ShapeMismatch("factors must be square, got " + shape_str(a.rows(), a.cols()) +
                            " and " + shape_str(b.rows(), b.cols()));
    }
    if (x.size() != a.rows() * b.rows()) {
        throw ShapeMismatch("input length " + std::to_string(x.size()) + " does not match " +
                            std::to_string(a.rows()) + "*" + std::to_string(b.rows()));
    }
}
} // namespace detail

// Reference route: materializes A (x)_j B and multiplies, (r*s)^2
// multiplications per component.
inline Vector apply_direct(const Matrix& a, const Matrix& b, const Vector& x,
                           OpCounter* counter = nullptr) {
    detail::require_factored_shapes(a, b, x);
    const Matrix c = tensor_idempotent(a, b);
    OpCounter local;
    OpCounter& tally = counter ? *counter : local;
    const CVec y1 = detail::counting_matvec(c.comp1(), x.comp1(), tally.complex_mults[0],
                                            tally.complex_adds[0]);
    const CVec y2 = detail::counting_matvec(c.comp2(), x.comp2(), tally.complex_mults[1],
                                            tally.complex_adds[1]);
    return Vector(y1, y2);
}

// Factored route: per component, s block products with B, the r-stride
// permutation, r block products with A, then the s-stride permutation.
// Permutations cost no multiplications.
inline Vector apply_factored(const Matrix& a, const Matrix& b, const Vector& x,
                             OpCounter* counter = nullptr) {
    detail::require_factored_shapes(a, b, x);
    const Eigen::Index s = a.rows();
    const Eigen::Index r = b.rows();
    const Eigen::Index n = s * r;
    const StridePermutation perm_r(n, r);
    const StridePermutation perm_s(n, s);
    OpCounter local;
    OpCounter& tally = counter ? *counter : local;

    CVec out[2];
    for (int l = 0; l < 2; ++l) {
        const CMat& al = l == 0 ? a.comp1() : a.comp2();
        const CMat& bl = l == 0 ? b.comp1() : b.comp2();
        const CVec& xl = l == 0 ? x.comp1() : x.comp2();
        std::uint64_t& mults = tally.complex_mults[static_cast<std::size_t>(l)];
        std::uint64_t& adds = tally.complex_adds[static_cast<std::size_t>(l)];

        CVec stage(n);
        for (Eigen::Index blk = 0; blk < s; ++blk) { // I_s (x) B
            stage.segment(blk * r, r) =
                detail::counting_matvec(bl, xl.segment(blk * r, r), mults, adds);
        }
        stage = perm_r.apply(stage);
        CVec stage2(n);
        for (Eigen::Index blk = 0; blk < r; ++blk) { // I_r (x) A
            stage2.segment(blk * s, s) =
                detail::counting_matvec(al, stage.segment(blk * s, s), mults, adds);
        }
        out[l] = perm_s.apply(stage2);
    }
    return Vector(out[0], out[1]);
}

} // namespace bcx
