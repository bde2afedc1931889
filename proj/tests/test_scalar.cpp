#include <catch2/catch_amalgamated.hpp>

#include <bcx/scalar.hpp>

#include "helpers.hpp"

using namespace bcx;
using testutil::dist;
using testutil::random_scalar;

TEST_CASE("idempotent split") {
    const Bicomplex z = Bicomplex::from_cartesian(1, 1, 1, 1);
    REQUIRE(z.comp1() == cplx(2, 0));
    REQUIRE(z.comp2() == cplx(0, 2));

    REQUIRE(e1.comp1() == cplx(1, 0));
    REQUIRE(e1.comp2() == cplx(0, 0));
    REQUIRE(dist(e1, Bicomplex::from_cartesian(0.5, 0, 0, 0.5)) == 0.0);

    // e1 - e2 = k
    REQUIRE(unit_k.comp1() == cplx(1, 0));
    REQUIRE(unit_k.comp2() == cplx(-1, 0));
}

TEST_CASE("idempotent join") {
    REQUIRE(dist(Bicomplex::from_idempotent(1, 0), e1) == 0.0);

    const Bicomplex z = Bicomplex::from_idempotent(cplx(2, 0), cplx(0, 2));
    REQUIRE(z.x1() == 1.0);
    REQUIRE(z.x2() == 1.0);
    REQUIRE(z.x3() == 1.0);
    REQUIRE(z.x4() == 1.0);

    // equal components embed C(i)
    const Bicomplex w = Bicomplex::from_idempotent(cplx(3, -2), cplx(3, -2));
    REQUIRE(w.x3() == 0.0);
    REQUIRE(w.x4() == 0.0);
    REQUIRE(w.z1() == cplx(3, -2));
}

TEST_CASE("split/join round trips") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Bicomplex z = random_scalar(rng);
        const Bicomplex back = Bicomplex::from_idempotent(z.comp1(), z.comp2());
        REQUIRE(back.comp1() == z.comp1());
        REQUIRE(back.comp2() == z.comp2());
    }

    // Cartesian views round trip exactly on a dyadic grid, where the
    // +/- and /2 combinations incur no rounding.
    std::uniform_int_distribution<int> grid(-8192, 8192);
    for (int trial = 0; trial < 200; ++trial) {
        const double x1 = grid(rng) / 1024.0;
        const double x2 = grid(rng) / 1024.0;
        const double x3 = grid(rng) / 1024.0;
        const double x4 = grid(rng) / 1024.0;
        const Bicomplex z = Bicomplex::from_cartesian(x1, x2, x3, x4);
        REQUIRE(z.x1() == x1);
        REQUIRE(z.x2() == x2);
        REQUIRE(z.x3() == x3);
        REQUIRE(z.x4() == x4);
    }
}

TEST_CASE("three conjugations") {
    REQUIRE(dist(unit_j.star(), -unit_j) == 0.0);
    REQUIRE(dist(e1.dagger(), e2) == 0.0);

    const Bicomplex z = Bicomplex::from_idempotent(cplx(1, 2), cplx(-3, 4));
    REQUIRE(z.star().comp1() == std::conj(z.comp1()));
    REQUIRE(z.star().comp2() == std::conj(z.comp2()));
    REQUIRE(z.dagger().comp1() == z.comp2());
    REQUIRE(z.bar().comp1() == std::conj(z.comp2()));
    REQUIRE(z.bar().comp2() == std::conj(z.comp1()));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Bicomplex a = random_scalar(rng);
        const Bicomplex b = random_scalar(rng);
        REQUIRE(dist(a.star().star(), a) == 0.0);
        REQUIRE(dist(a.bar().dagger(), a.star()) == 0.0);
        for (const Conj kind : {Conj::Bar, Conj::Dagger, Conj::Star}) {
            REQUIRE(dist(conjugate(a * b, kind), conjugate(a, kind) * conjugate(b, kind)) <
                    1e-13);
        }
    }
}

TEST_CASE("multiplication is component-wise") {
    REQUIRE((e1 * e2).euclidean_norm() == 0.0);

    const Bicomplex p = Bicomplex::from_idempotent(2, 3) * Bicomplex::from_idempotent(4, 5);
    REQUIRE(p.comp1() == cplx(8, 0));
    REQUIRE(p.comp2() == cplx(15, 0));

    REQUIRE(dist(unit_j * unit_j.dagger(), Bicomplex(1.0)) == 0.0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const Bicomplex a = random_scalar(rng);
        const Bicomplex b = random_scalar(rng);
        REQUIRE(std::abs((a * b).comp1() - a.comp1() * b.comp1()) < 1e-13);
        REQUIRE(std::abs((a * b).comp2() - a.comp2() * b.comp2()) < 1e-13);
        REQUIRE(std::abs((a + b).comp1() - (a.comp1() + b.comp1())) < 1e-13);
        REQUIRE(std::abs((a + b).comp2() - (a.comp2() + b.comp2())) < 1e-13);
    }
}

TEST_CASE("inverse") {
    REQUIRE(dist(unit_k.inverse(), unit_k) == 0.0);
    REQUIRE(dist(Bicomplex(2.0).inverse(), Bicomplex(0.5)) == 0.0);
    REQUIRE_THROWS_AS(e1.inverse(), ZeroDivisor);
    REQUIRE_THROWS_AS(e2.inverse(), ZeroDivisor);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Bicomplex a = random_scalar(rng) + Bicomplex::from_idempotent(3, 3);
        REQUIRE(dist(a * a.inverse(), Bicomplex(1.0)) < 1e-13);
    }
}

TEST_CASE("euclidean norm") {
    REQUIRE(std::abs(e1.euclidean_norm() - 1.0 / std::sqrt(2.0)) < 1e-15);
    REQUIRE(Bicomplex(1.0).euclidean_norm() == 1.0);
    REQUIRE(std::abs(Bicomplex::from_cartesian(1, 1, 1, 1).euclidean_norm() - 2.0) < 1e-15);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const Bicomplex z = random_scalar(rng);
        const double direct = std::sqrt(z.x1() * z.x1() + z.x2() * z.x2() + z.x3() * z.x3() +
                                        z.x4() * z.x4());
        REQUIRE(std::abs(z.euclidean_norm() - direct) < 1e-14);
    }
}

TEST_CASE("product norm inequality is sharp") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const Bicomplex z = random_scalar(rng);
        const Bicomplex w = random_scalar(rng);
        REQUIRE((z * w).euclidean_norm() <=
                std::sqrt(2.0) * z.euclidean_norm() * w.euclidean_norm() + 1e-12);
    }
    const double lhs = (e1 * e1).euclidean_norm();
    const double rhs = std::sqrt(2.0) * e1.euclidean_norm() * e1.euclidean_norm();
    REQUIRE(std::abs(lhs - rhs) < 1e-15);
    REQUIRE(std::abs(lhs - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("hyperbolic-valued norm") {
    REQUIRE(e1.d_norm().s() == 1.0);
    REQUIRE(e1.d_norm().t() == 0.0);

    REQUIRE(unit_k.d_norm().s() == 1.0);
    REQUIRE(unit_k.d_norm().t() == 1.0); // |1|e1 + |-1|e2 = 1

    const Bicomplex z = Bicomplex::from_idempotent(cplx(2, 0), cplx(0, 3));
    REQUIRE(z.d_norm().s() == 2.0);
    REQUIRE(z.d_norm().t() == 3.0);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const Bicomplex a = random_scalar(rng);
        const Bicomplex b = random_scalar(rng);
        const Hyperbolic prod = (a * b).d_norm();
        const Hyperbolic split = a.d_norm() * b.d_norm();
        REQUIRE(std::abs(prod.s() - split.s()) < 1e-13);
        REQUIRE(std::abs(prod.t() - split.t()) < 1e-13);
        REQUIRE(d_leq((a + b).d_norm(), a.d_norm() + b.d_norm(), 1e-12));
        REQUIRE(d_plus_contains(a.d_norm()));
    }
}

TEST_CASE("nonnegative cone membership") {
    REQUIRE(d_plus_contains(Hyperbolic::from_cartesian(5, 3)));
    REQUIRE_FALSE(d_plus_contains(Hyperbolic::from_cartesian(0, 1))); // k
    REQUIRE(d_plus_contains(Hyperbolic(0.0)));
}

TEST_CASE("partial order") {
    REQUIRE(d_leq(e1.hyperbolic_part(), Hyperbolic(1.0)));
    REQUIRE_FALSE(d_leq(Hyperbolic(1.0), Hyperbolic::from_cartesian(0, 1)));

    std::mt19937_64 rng(31);
    std::normal_distribution<double> d(0.0, 1.0);
    auto random_hyp = [&] { return Hyperbolic::from_idempotent(d(rng), d(rng)); };
    for (int trial = 0; trial < 200; ++trial) {
        const Hyperbolic a = random_hyp();
        const Hyperbolic b = random_hyp();
        const Hyperbolic c = random_hyp();
        REQUIRE(d_leq(a, a)); // reflexive
        if (d_leq(a, b, 0.0) && d_leq(b, a, 0.0)) {
            REQUIRE(std::abs(a.s() - b.s()) <= 1e-12);
            REQUIRE(std::abs(a.t() - b.t()) <= 1e-12);
        }
        if (d_leq(a, b, 0.0) && d_leq(b, c, 0.0)) {
            REQUIRE(d_leq(a, c, 1e-12));
        }
    }
}

TEST_CASE("hyperbolic modulus squared") {
    const Hyperbolic z = Hyperbolic::from_cartesian(2, 1);
    REQUIRE(z.modulus_sq() == 3.0);
    REQUIRE(std::abs(z.x() * z.x() - z.y() * z.y() - z.modulus_sq()) < 1e-14);
    REQUIRE(std::abs(z.s() * z.t() - z.modulus_sq()) < 1e-14);

    REQUIRE(e1.hyperbolic_part().modulus_sq() == 0.0); // zero divisor

    std::mt19937_64 rng(37);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = d(rng);
        const Hyperbolic real(x);
        REQUIRE(std::abs(real.modulus_sq() - x * x) < 1e-14);
        const Hyperbolic h = Hyperbolic::from_cartesian(d(rng), d(rng));
        REQUIRE(std::abs(h.modulus_sq() - (h.x() * h.x() - h.y() * h.y())) < 1e-14);
    }
}

TEST_CASE("hyperbolic embedding into the bicomplex algebra") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Hyperbolic h = Hyperbolic::from_cartesian(d(rng), d(rng));
        const Bicomplex z(h);
        REQUIRE(z.x2() == 0.0);
        REQUIRE(z.x3() == 0.0);
        REQUIRE(z.x1() == h.x());
        REQUIRE(z.x4() == h.y());
    }
}
