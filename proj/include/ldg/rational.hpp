#ifndef LDG_RATIONAL_HPP
#define LDG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ldg/errors.hpp"

namespace ldg {

using Rational = boost::multiprecision::cpp_rational;

int sign(const Rational& r);

// Accepts "p", "p/q" and plain decimals ("-0.125"), all parsed exactly.
Rational parseRational(const std::string& text);

// "p" or "p/q", canonical (reduced, positive denominator).
std::string formatRational(const Rational& r);

double toDouble(const Rational& r);

// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)); d is a
// fixed non-square parameter carried along (d >= 0). Arithmetic is
// exact; used to evaluate the gamma coefficient laws at the solved
// change-of-variables constants, which are irrational for lambda != 0.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, Rational d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static QuadExt fromRational(Rational a, Rational d) {
        return QuadExt(std::move(a), 0, std::move(d));
    }
    static QuadExt sqrtD(const Rational& d) { return QuadExt(0, 1, d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    // Exact equality with a rational value; handles the case where d
    // happens to be a perfect square (representation then non-unique).
    bool equalsRational(const Rational& r) const;

    double toDouble() const;

  private:
    void checkCompatible(const QuadExt& o) const;
    Rational a_, b_, d_;
};

}  // namespace ldg

#endif
