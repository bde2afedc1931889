#pragma once

#include <cstdint>
#include <random>

#include <bcx/bcx.hpp>

// Shared generators and predicates for the test suites. Everything is
// seeded explicitly so failures reproduce.

namespace testutil {

inline bcx::Bicomplex random_scalar(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return bcx::Bicomplex::from_idempotent({d(rng), d(rng)}, {d(rng), d(rng)});
}

inline bcx::Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    return bcx::Matrix(bcx::linalg::randn(rows, cols, rng),
                       bcx::linalg::randn(rows, cols, rng));
}

inline bcx::Vector random_vector(Eigen::Index n, std::mt19937_64& rng) {
    return bcx::Vector(bcx::linalg::randn(n, 1, rng).col(0),
                       bcx::linalg::randn(n, 1, rng).col(0));
}

// Both components get a diagonal shift of twice their largest singular
// value, capping the condition number around 3.
inline bcx::Matrix random_well_conditioned(Eigen::Index n, std::mt19937_64& rng) {
    bcx::CMat comps[2];
    for (auto& comp : comps) {
        const bcx::CMat g = bcx::linalg::randn(n, n, rng);
        double smin = 0.0, smax = 0.0;
        bcx::linalg::singular_value_range(g, smin, smax);
        comp = g + 2.0 * smax * bcx::CMat::Identity(n, n);
    }
    return bcx::Matrix(comps[0], comps[1]);
}

// Full-rank Gram matrix normalized to component traces 1.
inline bcx::Matrix random_state(Eigen::Index n, std::mt19937_64& rng) {
    const bcx::Matrix b = random_matrix(n, n, rng);
    const bcx::Matrix gram = b.star_transpose() * b;
    return gram * gram.trace().inverse();
}

inline bcx::KrausSet random_kraus(Eigen::Index n, Eigen::Index m, int count,
                                  std::mt19937_64& rng) {
    std::vector<bcx::Matrix> ops;
    ops.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ops.push_back(random_matrix(m, n, rng));
    return bcx::KrausSet(n, m, std::move(ops));
}

// D+ membership of a bicomplex value up to numerical noise: imaginary
// parts below tol (scaled) and real idempotent coordinates >= -tol.
inline bool in_d_plus_within(bcx::Bicomplex q, double tol) {
    const double scale = 1.0 + q.euclidean_norm();
    return std::abs(q.comp1().imag()) <= tol * scale &&
           std::abs(q.comp2().imag()) <= tol * scale &&
           q.comp1().real() >= -tol * scale && q.comp2().real() >= -tol * scale;
}

inline double dist(bcx::Bicomplex a, bcx::Bicomplex b) {
    return (a - b).euclidean_norm();
}

} // namespace testutil
