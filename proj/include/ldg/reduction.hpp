#ifndef LDG_REDUCTION_HPP
#define LDG_REDUCTION_HPP

// Solve for the near-identity change of variables z = x + h(x),
//   h = k1 F2 + k2 T2 x + k3 T3 x + k4 T2 F2,
// normalizing the degree-6 potential to gamma4 = 0, gamma5 = gamma6 = 1,
// and certify the transformation symbolically.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ldg/invariants.hpp"
#include "ldg/poly.hpp"
#include "ldg/rational.hpp"

namespace ldg {

// Degeneracy gate for |c2| and |gamma3|.
inline constexpr double kDegeneracyEps = 1e-8;

// k1 is fixed to 0 throughout; the F2 direction is still carried so
// the assumption stays checkable symbolically.
struct ChangeOfVariables {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
};

// Exact solution: k3 is rational, k2 and k4 live in Q(sqrt(disc)).
struct ChangeOfVariablesExact {
    Rational k3;
    QuadExt k2;
    QuadExt k4;
    Rational disc;  // discriminant of the k2 quadratic
};

// (lambda, gamma2, gamma3) of the simplified potential
//   Phi = -lambda T2 + gamma2 T3 + gamma3 T2^2 + T2^3 + T3^2.
struct ReducedPotential {
    double lambda = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
};

struct CertificateReport {
    std::array<Rational, 6> a{};  // decomposition of the truncated potential
    bool matchesGammaLaws = false;
    bool normalized = false;  // a4 = 0, a5 = 1, a6 = 1 exactly
    // Term count of the discarded degree 7..24 remainder; only set
    // when the full (untruncated) composition was computed.
    std::optional<std::size_t> remainderTermCount;
};

using RationalCoefficients = std::array<Rational, 6>;

LdgCoefficients toDoubleCoefficients(const RationalCoefficients& c);

// Closed-form transformation laws (require k1 = 0):
//   gamma2 = c2
//   gamma3 = c3 + 2 c1 k2
//   gamma4 = c4 + 3 c2 k2 + 2 c1 k3 + 9 c1 k4
//   gamma5 = c5 + c1 k2^2 + 4 c3 k2 + 2 c2 k4
//   gamma6 = c6 + 3 c2 k3
std::array<double, 6> gammaLaws(const LdgCoefficients& c,
                                const ChangeOfVariables& k);
std::array<Rational, 6> gammaLaws(const RationalCoefficients& c,
                                  const std::array<Rational, 4>& k);

ChangeOfVariables solveK(const LdgCoefficients& c);
ChangeOfVariablesExact solveKExact(const RationalCoefficients& c);

ReducedPotential reduce(const LdgCoefficients& c);

// Builds z = x + h(x) as polynomials; k[0] = k1 is accepted nonzero so
// the k1 = 0 assumption itself can be probed.
std::array<SparsePoly, 5> buildSubstitution(const std::array<Rational, 4>& k,
                                            int maxDeg = SparsePoly::kDegreeCap);

// Substitutes z(x) into the full potential, truncates at degree 6 and
// decomposes in the invariant basis; fullRemainder additionally
// computes the untruncated composition to count discarded terms.
CertificateReport certifyReduction(const RationalCoefficients& c,
                                   const std::array<Rational, 4>& k,
                                   bool fullRemainder = false);

// One record per non-comment line, "c1,c2,c3,c4,c5,c6"; '#' comments.
// Throws DomainError with line/column context on malformed input.
std::vector<RationalCoefficients> readCoefficientRecords(const std::string& text);

}  // namespace ldg

#endif
