#ifndef LDG_TEST_UTIL_HPP
#define LDG_TEST_UTIL_HPP

#include <random>

#include "ldg/invariants.hpp"
#include "ldg/rational.hpp"

namespace ldg::testutil {

inline StateVector randomState(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

inline Rotation randomRotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec3 axis;
    do {
        axis = {u(rng), u(rng), u(rng)};
    } while (axis[0] == 0.0 && axis[1] == 0.0 && axis[2] == 0.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    return Rotation::fromAxisAngle(axis, ang(rng));
}

inline Rational randomRational(std::mt19937_64& rng, int numRange = 10,
                               int denRange = 6) {
    std::uniform_int_distribution<int> num(-numRange, numRange);
    std::uniform_int_distribution<int> den(1, denRange);
    return Rational(num(rng), den(rng));
}

// Central finite difference of the potential, step 1e-6.
inline StateVector fdGrad(const LdgCoefficients& c, const StateVector& v,
                          double h = 1e-6) {
    StateVector g;
    for (int i = 0; i < 5; ++i) {
        StateVector p = v, m = v;
        p[i] += h;
        m[i] -= h;
        g[i] = (evalLdg(c, p) - evalLdg(c, m)) / (2.0 * h);
    }
    return g;
}

}  // namespace ldg::testutil

#endif
