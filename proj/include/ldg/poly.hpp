#ifndef LDG_POLY_HPP
#define LDG_POLY_HPP

// Exact sparse polynomial arithmetic in the five variables x1..x5,
// with rational coefficients. Carrier for the symbolic change of
// variables and the certification of the coefficient transformation
// laws; no stored zero coefficients, canonical graded-lex term order.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ldg/rational.hpp"

namespace ldg {

using Monomial = std::array<std::uint16_t, 5>;

inline int monomialDegree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic: compare total degree first, then exponents.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomialDegree(a), db = monomialDegree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class SparsePoly {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    // Degree-6 potential composed with a degree-4 substitution.
    static constexpr int kDegreeCap = 24;

    SparsePoly() = default;

    static SparsePoly zero() { return {}; }
    static SparsePoly constant(const Rational& c);
    static SparsePoly variable(int i);  // x_{i+1}, i in [0,5)
    static SparsePoly monomial(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coeff(const Monomial& m) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    SparsePoly scale(const Rational& c) const;

    // Product keeping only terms of total degree <= maxDeg.
    SparsePoly mulTruncated(const SparsePoly& o, int maxDeg) const;
    SparsePoly pow(int n, int maxDeg = kDegreeCap) const;

    // Exact composition p(s1,...,s5); maxDeg truncates during the
    // expansion (sound: truncation commutes with the product).
    SparsePoly substitute(const std::array<SparsePoly, 5>& s,
                          int maxDeg = kDegreeCap) const;

    SparsePoly truncate(int maxDeg) const;
    // Terms of total degree in [lo, hi].
    SparsePoly slice(int lo, int hi) const;

    // One term per line, "coeff e1 e2 e3 e4 e5", canonical order.
    std::string toText() const;
    static SparsePoly fromText(const std::string& text);

    void addTerm(const Monomial& m, const Rational& c);

  private:
    TermMap terms_;
};

// x1..x5 as polynomials, in order.
std::array<SparsePoly, 5> polyVariables();

SparsePoly polyT2();
SparsePoly polyT3();
std::array<SparsePoly, 5> polyF2();

// The invariant basis {T2, T3, T2^2, T2*T3, T2^3, T3^2}.
std::array<SparsePoly, 6> invariantBasis();

// Exact coefficients (a1..a6) with p = a1 T2 + ... + a6 T3^2; throws
// DecompositionError (carrying the residual, canonical text) when p is
// not in the span.
std::array<Rational, 6> decomposeInvariant(const SparsePoly& p);

}  // namespace ldg

#endif
