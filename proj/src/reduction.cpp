#include "ldg/reduction.hpp"

#include <cmath>
#include <sstream>

namespace ldg {

LdgCoefficients toDoubleCoefficients(const RationalCoefficients& c) {
    return {toDouble(c[0]), toDouble(c[1]), toDouble(c[2]),
            toDouble(c[3]), toDouble(c[4]), toDouble(c[5])};
}

std::array<double, 6> gammaLaws(const LdgCoefficients& c,
                                const ChangeOfVariables& k) {
    if (k.k1 != 0.0)
        throw DomainError("gamma laws are stated for k1 = 0");
    return {
        c.c1,
        c.c2,
        c.c3 + 2.0 * c.c1 * k.k2,
        c.c4 + 3.0 * c.c2 * k.k2 + 2.0 * c.c1 * k.k3 + 9.0 * c.c1 * k.k4,
        c.c5 + c.c1 * k.k2 * k.k2 + 4.0 * c.c3 * k.k2 + 2.0 * c.c2 * k.k4,
        c.c6 + 3.0 * c.c2 * k.k3,
    };
}

std::array<Rational, 6> gammaLaws(const RationalCoefficients& c,
                                  const std::array<Rational, 4>& k) {
    if (k[0] != 0)
        throw DomainError("gamma laws are stated for k1 = 0");
    const Rational &c1 = c[0], &c2 = c[1], &c3 = c[2], &c4 = c[3], &c5 = c[4],
                   &c6 = c[5];
    const Rational &k2 = k[1], &k3 = k[2], &k4 = k[3];
    return {
        c1,
        c2,
        c3 + 2 * c1 * k2,
        c4 + 3 * c2 * k2 + 2 * c1 * k3 + 9 * c1 * k4,
        c5 + c1 * k2 * k2 + 4 * c3 * k2 + 2 * c2 * k4,
        c6 + 3 * c2 * k3,
    };
}

ChangeOfVariables solveK(const LdgCoefficients& c) {
    if (std::abs(c.c2) < kDegeneracyEps)
        throw DegeneracyError("non-degeneracy assumption c2 != 0 violated");
    const double lambda = -c.c1;

    ChangeOfVariables k;
    k.k3 = (1.0 - c.c6) / (3.0 * c.c2);

    // gamma4 = 0 with k4 eliminated through gamma5 = 1 gives
    // A k2^2 + B k2 + C = 0; no intermediate division by lambda.
    const double A = -9.0 * lambda * lambda / (2.0 * c.c2);
    const double B = 3.0 * c.c2 + 18.0 * lambda * c.c3 / c.c2;
    const double C =
        c.c4 - 2.0 * lambda * k.k3 - 9.0 * lambda * (1.0 - c.c5) / (2.0 * c.c2);

    if (A == 0.0) {
        k.k2 = -C / B;  // B = 3 c2 != 0 here
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc < 0.0)
            throw OutsidePerturbativeRegime(
                "k2 quadratic has no real root (lambda too large)");
        const double sgnB = (B >= 0.0) ? 1.0 : -1.0;
        const double denom = B + sgnB * std::sqrt(disc);
        // The root analytic at lambda = 0, with limit -c4/(3 c2); the
        // denominator only vanishes for B = 0, disc = 0 (double root 0).
        k.k2 = (denom == 0.0) ? 0.0 : -2.0 * C / denom;
    }

    k.k4 = (1.0 - c.c5 + lambda * k.k2 * k.k2 - 4.0 * c.c3 * k.k2) /
           (2.0 * c.c2);
    return k;
}

ChangeOfVariablesExact solveKExact(const RationalCoefficients& c) {
    const Rational &c1 = c[0], &c2 = c[1], &c3 = c[2], &c4 = c[3], &c5 = c[4],
                   &c6 = c[5];
    if (c2 == 0)
        throw DegeneracyError("non-degeneracy assumption c2 != 0 violated");
    const Rational lambda = -c1;

    Rational k3 = (1 - c6) / (3 * c2);

    const Rational A = Rational(-9) * lambda * lambda / (2 * c2);
    const Rational B = 3 * c2 + 18 * lambda * c3 / c2;
    const Rational C = c4 - 2 * lambda * k3 - 9 * lambda * (1 - c5) / (2 * c2);
    const Rational disc = B * B - 4 * A * C;
    if (disc < 0)
        throw OutsidePerturbativeRegime(
            "k2 quadratic has no real root (lambda too large)");

    QuadExt k2 = QuadExt::fromRational(0, disc);
    if (A == 0) {
        k2 = QuadExt::fromRational(-C / B, disc);
    } else {
        Rational sgnB = (B >= 0) ? 1 : -1;
        QuadExt denom =
            QuadExt::fromRational(B, disc) + QuadExt(0, sgnB, disc);
        if (!denom.equalsRational(0))
            k2 = QuadExt::fromRational(-2 * C, disc) / denom;
    }

    QuadExt k4 = (QuadExt::fromRational(1 - c5, disc) +
                  QuadExt::fromRational(lambda, disc) * k2 * k2 -
                  QuadExt::fromRational(4 * c3, disc) * k2) /
                 QuadExt::fromRational(2 * c2, disc);
    return {k3, k2, k4, disc};
}

ReducedPotential reduce(const LdgCoefficients& c) {
    ChangeOfVariables k = solveK(c);
    auto g = gammaLaws(c, k);

    // The normalization targets must be met to rounding.
    if (std::abs(g[3]) > 1e-12 || std::abs(g[4] - 1.0) > 1e-12 ||
        std::abs(g[5] - 1.0) > 1e-12)
        throw Error("internal: solved k does not normalize gamma4..gamma6");

    if (std::abs(g[2]) < kDegeneracyEps)
        throw MulticriticalError("|gamma3| below threshold; mu undefined");

    return {-c.c1, g[1], g[2]};
}

std::array<SparsePoly, 5> buildSubstitution(const std::array<Rational, 4>& k,
                                            int maxDeg) {
    auto x = polyVariables();
    auto f2 = polyF2();
    SparsePoly t2 = polyT2(), t3 = polyT3();
    std::array<SparsePoly, 5> z;
    for (int i = 0; i < 5; ++i) {
        z[i] = x[i] + f2[i].scale(k[0]) +
               t2.mulTruncated(x[i], maxDeg).scale(k[1]) +
               t3.mulTruncated(x[i], maxDeg).scale(k[2]) +
               t2.mulTruncated(f2[i], maxDeg).scale(k[3]);
    }
    return z;
}

CertificateReport certifyReduction(const RationalCoefficients& c,
                                   const std::array<Rational, 4>& k,
                                   bool fullRemainder) {
    const int maxDeg = fullRemainder ? SparsePoly::kDegreeCap : 6;
    auto z = buildSubstitution(k, maxDeg);

    SparsePoly t2x = polyT2().substitute(z, maxDeg);
    SparsePoly t3x = polyT3().substitute(z, maxDeg);

    SparsePoly phi = t2x.scale(c[0]) + t3x.scale(c[1]) +
                     t2x.mulTruncated(t2x, maxDeg).scale(c[2]) +
                     t2x.mulTruncated(t3x, maxDeg).scale(c[3]) +
                     t2x.mulTruncated(t2x, maxDeg)
                         .mulTruncated(t2x, maxDeg)
                         .scale(c[4]) +
                     t3x.mulTruncated(t3x, maxDeg).scale(c[5]);

    CertificateReport report;
    SparsePoly low = phi.truncate(6);
    report.a = decomposeInvariant(low);

    if (fullRemainder)
        report.remainderTermCount = (phi - low).termCount();

    if (k[0] == 0) {
        auto laws = gammaLaws(c, k);
        report.matchesGammaLaws = true;
        for (int i = 0; i < 6; ++i)
            if (report.a[i] != laws[i]) report.matchesGammaLaws = false;
    }
    report.normalized =
        report.a[3] == 0 && report.a[4] == 1 && report.a[5] == 1;
    return report;
}

std::vector<RationalCoefficients> readCoefficientRecords(
    const std::string& text) {
    std::vector<RationalCoefficients> records;
    std::istringstream is(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;

        RationalCoefficients rec;
        std::istringstream ls(line);
        std::string field;
        int col = 0;
        while (std::getline(ls, field, ',')) {
            if (col >= 6)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": more than 6 coefficients");
            try {
                rec[col] = parseRational(field);
            } catch (const DomainError&) {
                throw DomainError("line " + std::to_string(lineNo) +
                                  ", column " + std::to_string(col + 1) +
                                  ": malformed coefficient '" + field + "'");
            }
            ++col;
        }
        if (col != 6)
            throw DomainError("line " + std::to_string(lineNo) +
                              ": expected 6 coefficients, got " +
                              std::to_string(col));
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace ldg
