#include "ldg/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace ldg {

Rotation Rotation::fromAxisAngle(const Vec3& axis, double angle) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (n == 0.0) throw DomainError("rotation axis must be nonzero");
    double ux = axis[0] / n, uy = axis[1] / n, uz = axis[2] / n;
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;

    Mat3 r;
    r(0, 0) = c + ux * ux * t;
    r(0, 1) = ux * uy * t - uz * s;
    r(0, 2) = ux * uz * t + uy * s;
    r(1, 0) = uy * ux * t + uz * s;
    r(1, 1) = c + uy * uy * t;
    r(1, 2) = uy * uz * t - ux * s;
    r(2, 0) = uz * ux * t - uy * s;
    r(2, 1) = uz * uy * t + ux * s;
    r(2, 2) = c + uz * uz * t;

    // Modified Gram-Schmidt on the rows, then rebuild the third row as
    // a cross product to pin det = +1.
    auto row = [&r](int i) { return Vec3{r(i, 0), r(i, 1), r(i, 2)}; };
    auto setRow = [&r](int i, const Vec3& v) {
        r(i, 0) = v[0];
        r(i, 1) = v[1];
        r(i, 2) = v[2];
    };
    auto dot = [](const Vec3& a, const Vec3& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    auto normalize = [&dot](Vec3 v) {
        double m = std::sqrt(dot(v, v));
        return Vec3{v[0] / m, v[1] / m, v[2] / m};
    };

    Vec3 r0 = normalize(row(0));
    Vec3 r1 = row(1);
    double p = dot(r1, r0);
    r1 = normalize({r1[0] - p * r0[0], r1[1] - p * r0[1], r1[2] - p * r0[2]});
    Vec3 r2 = {r0[1] * r1[2] - r0[2] * r1[1], r0[2] * r1[0] - r0[0] * r1[2],
               r0[0] * r1[1] - r0[1] * r1[0]};
    setRow(0, r0);
    setRow(1, r1);
    setRow(2, r2);
    return Rotation(r);
}

Mat3 toMatrix(const StateVector& v) {
    Mat3 q;
    q(0, 0) = v[0];
    q(0, 1) = q(1, 0) = v[1];
    q(0, 2) = q(2, 0) = v[2];
    q(1, 1) = v[3];
    q(1, 2) = q(2, 1) = v[4];
    q(2, 2) = -(v[0] + v[3]);
    return q;
}

StateVector toState(const Mat3& q) {
    return {q(0, 0), q(0, 1), q(0, 2), q(1, 1), q(1, 2)};
}

InvariantPair evalInvariants(const StateVector& v) {
    const double z1 = v[0], z2 = v[1], z3 = v[2], z4 = v[3], z5 = v[4];
    InvariantPair p;
    p.t2 = z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4 + z5 * z5 + z1 * z4;
    p.t3 = z1 * (z2 * z2 - z4 * z4 - z5 * z5) -
           z4 * (z1 * z1 - z2 * z2 + z3 * z3) + 2.0 * z2 * z3 * z5;
    return p;
}

PhysicalState toPhysical(const InvariantPair& p) {
    if (p.t2 <= 0.0)
        throw DomainError("change of variable singular at q=0 (t2 <= 0)");
    PhysicalState s;
    s.q = std::sqrt(p.t2);
    s.omega = 1.0 - std::sqrt(6.0 * p.t3 * p.t3 / (p.t2 * p.t2 * p.t2));
    return s;
}

bool admissible(const InvariantPair& p, AdmissibilityMode mode) {
    if (p.t2 < -kAdmissibilityTol) return false;
    double t2c = p.t2 * p.t2 * p.t2;
    double t3s = p.t3 * p.t3;
    double margin = (mode == AdmissibilityMode::Paper) ? t2c - 6.0 * t3s
                                                       : 4.0 * t2c - 27.0 * t3s;
    return margin >= -kAdmissibilityTol;
}

StateVector covariantF2(const StateVector& x) {
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
    return {
        (x1 * x1 + x2 * x2 + x3 * x3) - 2.0 * (x1 * x4 + x4 * x4 + x5 * x5),
        3.0 * (x1 * x2 + x2 * x4 + x3 * x5),
        3.0 * (x2 * x5 - x3 * x4),
        (x2 * x2 + x4 * x4 + x5 * x5) - 2.0 * (x1 * x1 + x3 * x3 + x1 * x4),
        3.0 * (x2 * x3 - x1 * x5),
    };
}

StateVector covariantF3(const StateVector& x) {
    double t2 = evalInvariants(x).t2;
    StateVector r = x;
    for (auto& c : r) c *= t2;
    return r;
}

StateVector covariantF4a(const StateVector& x) {
    double t3 = evalInvariants(x).t3;
    StateVector r = x;
    for (auto& c : r) c *= t3;
    return r;
}

StateVector covariantF4b(const StateVector& x) {
    double t2 = evalInvariants(x).t2;
    StateVector r = covariantF2(x);
    for (auto& c : r) c *= t2;
    return r;
}

StateVector inducedAction(const Rotation& r, const StateVector& v) {
    const Mat3& m = r.matrix();
    return toState(m * toMatrix(v) * m.transpose());
}

double evalLdg(const LdgCoefficients& c, const InvariantPair& p) {
    const double t2 = p.t2, t3 = p.t3;
    return c.c1 * t2 + c.c2 * t3 + c.c3 * t2 * t2 + c.c4 * t2 * t3 +
           c.c5 * t2 * t2 * t2 + c.c6 * t3 * t3;
}

double evalLdg(const LdgCoefficients& c, const StateVector& v) {
    return evalLdg(c, evalInvariants(v));
}

StateVector gradLdg(const LdgCoefficients& c, const StateVector& v) {
    const double z1 = v[0], z2 = v[1], z3 = v[2], z4 = v[3], z5 = v[4];
    InvariantPair p = evalInvariants(v);
    // dPhi/dT2 and dPhi/dT3
    double f2 = c.c1 + 2.0 * c.c3 * p.t2 + c.c4 * p.t3 + 3.0 * c.c5 * p.t2 * p.t2;
    double f3 = c.c2 + c.c4 * p.t2 + 2.0 * c.c6 * p.t3;

    StateVector dT2 = {2.0 * z1 + z4, 2.0 * z2, 2.0 * z3, 2.0 * z4 + z1, 2.0 * z5};
    StateVector dT3 = {
        z2 * z2 - z4 * z4 - z5 * z5 - 2.0 * z1 * z4,
        2.0 * (z1 * z2 + z2 * z4 + z3 * z5),
        2.0 * (z2 * z5 - z3 * z4),
        -2.0 * z1 * z4 - z1 * z1 + z2 * z2 - z3 * z3,
        2.0 * (z2 * z3 - z1 * z5),
    };

    StateVector g;
    for (int i = 0; i < 5; ++i) g[i] = f2 * dT2[i] + f3 * dT3[i];
    return g;
}

Vec3 eigenvaluesSym(const Mat3& m) {
    // Closed form for a symmetric 3x3 matrix (trigonometric method).
    double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    double q = m.trace() / 3.0;
    if (p1 == 0.0) {
        Vec3 e = {m(0, 0), m(1, 1), m(2, 2)};
        std::sort(e.begin(), e.end());
        return e;
    }
    double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
                (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * p1;
    double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b(i, j) = (m(i, j) - (i == j ? q : 0.0)) / p;
    double r = b.det() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    double e1 = q + 2.0 * p * std::cos(phi);
    double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    double e2 = 3.0 * q - e1 - e3;
    Vec3 e = {e1, e2, e3};
    std::sort(e.begin(), e.end());
    return e;
}

bool hasRepeatedEigenvalue(const StateVector& v, double tol) {
    InvariantPair p = evalInvariants(v);
    double scale = std::max(1.0, p.t2 * p.t2 * p.t2);
    return std::abs(4.0 * p.t2 * p.t2 * p.t2 - 27.0 * p.t3 * p.t3) <= tol * scale;
}

}  // namespace ldg
