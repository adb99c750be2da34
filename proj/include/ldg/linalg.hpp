#ifndef LDG_LINALG_HPP
#define LDG_LINALG_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "ldg/errors.hpp"

namespace ldg {

using Vec5 = std::array<double, 5>;
using Vec3 = std::array<double, 3>;

// Dense 3x3 real matrix, row major.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    Mat3 transpose() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
        return t;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) -
               a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }

    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

inline double frobeniusDistanceToIdentity(const Mat3& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double d = m(i, j) - (i == j ? 1.0 : 0.0);
            s += d * d;
        }
    return std::sqrt(s);
}

// Proper rotation, validated on construction: R^T R = I and det R = 1,
// both to 1e-12.
class Rotation {
  public:
    static constexpr double kOrthoTol = 1e-12;

    explicit Rotation(const Mat3& r) : r_(r) {
        if (frobeniusDistanceToIdentity(r.transpose() * r) > kOrthoTol ||
            std::abs(r.det() - 1.0) > kOrthoTol)
            throw DomainError("matrix is not a proper rotation to 1e-12");
    }

    static Rotation identity() { return Rotation(Mat3::identity()); }

    // Rodrigues formula; the result is re-orthonormalized so the
    // validity check passes regardless of rounding in sin/cos.
    static Rotation fromAxisAngle(const Vec3& axis, double angle);

    const Mat3& matrix() const { return r_; }

  private:
    Mat3 r_;
};

}  // namespace ldg

#endif
