#include <doctest.h>

#include <cmath>
#include <random>

#include "ldg/invariants.hpp"
#include "test_util.hpp"

using namespace ldg;
using namespace ldg::testutil;

namespace {

// Independent route for the invariants: trace formulas on the matrix.
InvariantPair traceInvariants(const StateVector& v) {
    Mat3 q = toMatrix(v);
    Mat3 q2 = q * q;
    Mat3 q3 = q2 * q;
    return {0.5 * q2.trace(), q3.trace() / 3.0};
}

}  // namespace

TEST_CASE("toMatrix layout and round trip") {
    Mat3 z = toMatrix({0, 0, 0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z(i, j) == 0.0);

    Mat3 a = toMatrix({1, 0, 0, 1, 0});
    CHECK(a(0, 0) == 1.0);
    CHECK(a(1, 1) == 1.0);
    CHECK(a(2, 2) == -2.0);
    CHECK(a(0, 1) == 0.0);

    Mat3 b = toMatrix({2, 0, 0, -1, 0});
    CHECK(b(0, 0) == 2.0);
    CHECK(b(1, 1) == -1.0);
    CHECK(b(2, 2) == -1.0);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        StateVector v = randomState(rng);
        Mat3 q = toMatrix(v);
        CHECK(std::abs(q.trace()) < 1e-15);
        StateVector w = toState(q);
        for (int i = 0; i < 5; ++i) CHECK(w[i] == v[i]);
    }
}

TEST_CASE("evalInvariants matches the trace formulas") {
    auto p = evalInvariants({0, 0, 0, 0, 0});
    CHECK(p.t2 == 0.0);
    CHECK(p.t3 == 0.0);

    p = evalInvariants({1, 0, 0, 1, 0});  // diag(1,1,-2)
    CHECK(p.t2 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p.t3 == doctest::Approx(-2.0).epsilon(1e-12));

    p = evalInvariants({2, 0, 0, -1, 0});  // diag(2,-1,-1)
    CHECK(p.t2 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p.t3 == doctest::Approx(2.0).epsilon(1e-12));

    p = evalInvariants({1, 0, 0, -1, 0});  // diag(1,-1,0), maximally biaxial
    CHECK(p.t2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.t3 == doctest::Approx(0.0).epsilon(1e-12));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        StateVector v = randomState(rng, 2.0);
        auto a = evalInvariants(v);
        auto b = traceInvariants(v);
        double s2 = std::max(1.0, std::abs(b.t2));
        double s3 = std::max(1.0, std::abs(b.t3));
        CHECK(std::abs(a.t2 - b.t2) <= 1e-12 * s2);
        CHECK(std::abs(a.t3 - b.t3) <= 1e-12 * s3);
    }
}

TEST_CASE("toPhysical") {
    auto s = toPhysical({1.0, 0.0});
    CHECK(s.q == doctest::Approx(1.0));
    CHECK(s.omega == doctest::Approx(1.0));

    s = toPhysical({3.0, -2.0});
    CHECK(s.q == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    CHECK(s.omega == doctest::Approx(1.0 - std::sqrt(8.0 / 9.0)).epsilon(1e-10));
    CHECK(s.omega == doctest::Approx(0.057191).epsilon(1e-4));

    CHECK_THROWS_AS(toPhysical({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(toPhysical({-1.0, 0.0}), DomainError);
}

TEST_CASE("admissible in both modes") {
    // (3, 2): uniaxial boundary for the exact mode, interior for paper.
    CHECK(admissible({3.0, 2.0}, AdmissibilityMode::Paper));
    CHECK(admissible({3.0, 2.0}, AdmissibilityMode::Exact));
    CHECK(4.0 * 27.0 - 27.0 * 4.0 == 0.0);

    CHECK_FALSE(admissible({1.0, 1.0}, AdmissibilityMode::Paper));
    CHECK(admissible({0.0, 0.0}, AdmissibilityMode::Paper));
    CHECK(admissible({0.0, 0.0}, AdmissibilityMode::Exact));

    // The exact bound is strictly sharper: 4/27 < 1/6, so a band of
    // (T2, T3) pairs passes the paper condition yet is unrealizable.
    InvariantPair band{1.0, 0.4};  // T3^2 = 0.16 in (4/27, 1/6)
    CHECK(admissible(band, AdmissibilityMode::Paper));
    CHECK_FALSE(admissible(band, AdmissibilityMode::Exact));
}

TEST_CASE("covariant components") {
    StateVector z = covariantF2({0, 0, 0, 0, 0});
    for (double c : z) CHECK(c == 0.0);

    StateVector a = covariantF2({1, 0, 0, 0, 0});
    CHECK(a == StateVector{1, 0, 0, -2, 0});

    StateVector b = covariantF2({0, 1, 0, 0, 0});
    CHECK(b == StateVector{1, 0, 0, 1, 0});
}

TEST_CASE("induced action") {
    std::mt19937_64 rng(23);
    StateVector v = randomState(rng);
    StateVector w = inducedAction(Rotation::identity(), v);
    for (int i = 0; i < 5; ++i) CHECK(w[i] == doctest::Approx(v[i]).epsilon(1e-14));

    // pi about z conjugates the off-plane entries.
    Rotation rz = Rotation::fromAxisAngle({0, 0, 1}, M_PI);
    StateVector f = inducedAction(rz, {0, 0, 1, 0, 0});
    CHECK(f[2] == doctest::Approx(-1.0).epsilon(1e-12));
    for (int i : {0, 1, 3, 4}) CHECK(std::abs(f[i]) < 1e-12);

    for (int t = 0; t < 50; ++t) {
        Rotation r = randomRotation(rng);
        StateVector x = randomState(rng, 2.0);
        auto p0 = evalInvariants(x);
        auto p1 = evalInvariants(inducedAction(r, x));
        CHECK(std::abs(p0.t2 - p1.t2) <= 1e-10 * std::max(1.0, std::abs(p0.t2)));
        CHECK(std::abs(p0.t3 - p1.t3) <= 1e-10 * std::max(1.0, std::abs(p0.t3)));
    }
}

TEST_CASE("covariants are equivariant") {
    std::mt19937_64 rng(29);
    using CovFn = StateVector (*)(const StateVector&);
    for (CovFn f : {covariantF2, covariantF3, covariantF4a, covariantF4b}) {
        for (int t = 0; t < 30; ++t) {
            Rotation r = randomRotation(rng);
            StateVector x = randomState(rng);
            StateVector lhs = inducedAction(r, f(x));
            StateVector rhs = f(inducedAction(r, x));
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-10);
        }
    }
}

TEST_CASE("realizability bounds on random states") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        StateVector v = randomState(rng, 2.0);
        auto p = evalInvariants(v);
        double t2c = p.t2 * p.t2 * p.t2;
        CHECK(t2c - 6.0 * p.t3 * p.t3 >= -1e-10 * std::max(1.0, t2c));
        CHECK(4.0 * t2c - 27.0 * p.t3 * p.t3 >= -1e-10 * std::max(1.0, t2c));
        if (p.t2 > 1e-8) {
            auto s = toPhysical(p);
            CHECK(s.omega >= -1e-10);
            CHECK(s.omega <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("repeated eigenvalue iff discriminant boundary") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int t = 0; t < 50; ++t) {
        // Uniaxial state rotated into general position.
        double a = u(rng) * (t % 2 == 0 ? 1.0 : -1.0);
        StateVector uni = {2.0 * a, 0, 0, -a, 0};
        StateVector v = inducedAction(randomRotation(rng), uni);
        CHECK(hasRepeatedEigenvalue(v));
        Vec3 e = eigenvaluesSym(toMatrix(v));
        double gapMin = std::min(e[1] - e[0], e[2] - e[1]);
        CHECK(gapMin <= 1e-6);
    }
    // Generic biaxial states are bounded away from the boundary.
    for (int t = 0; t < 50; ++t) {
        StateVector v = randomState(rng, 1.5);
        Vec3 e = eigenvaluesSym(toMatrix(v));
        double gapMin = std::min(e[1] - e[0], e[2] - e[1]);
        if (gapMin > 1e-3) CHECK_FALSE(hasRepeatedEigenvalue(v));
    }
}

TEST_CASE("potential and gradient") {
    CHECK(evalLdg({1, 0, 0, 0, 0, 0}, InvariantPair{3.0, -2.0}) ==
          doctest::Approx(3.0));
    CHECK(evalLdg({0, 1, 1, 0, 1, 1}, InvariantPair{3.0, -2.0}) ==
          doctest::Approx(38.0));

    LdgCoefficients c{0.3, -1.2, 0.7, 0.4, 1.1, 0.2};
    StateVector g0 = gradLdg(c, {0, 0, 0, 0, 0});
    for (double gi : g0) CHECK(gi == 0.0);

    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        StateVector v = randomState(rng, 1.5);
        StateVector g = gradLdg(c, v);
        StateVector fd = fdGrad(c, v);
        for (int i = 0; i < 5; ++i) {
            double scale = std::max(1.0, std::abs(fd[i]));
            CHECK(std::abs(g[i] - fd[i]) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("rotation validation") {
    Mat3 notRot = Mat3::identity();
    notRot(0, 0) = 2.0;
    CHECK_THROWS_AS(Rotation{notRot}, DomainError);

    Mat3 reflection = Mat3::identity();
    reflection(2, 2) = -1.0;  // det = -1
    CHECK_THROWS_AS(Rotation{reflection}, DomainError);
}
