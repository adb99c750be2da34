#ifndef LDG_ORBIT_HPP
#define LDG_ORBIT_HPP

// Branch structure, stability, admissibility thresholds, energies and
// transition classification of the simplified potential
//   Phi = -lambda T2 + gamma2 T3 + gamma3 T2^2 + T2^3 + T3^2
// in orbit-space coordinates (T2, T3).

#include <array>
#include <utility>

#include "ldg/invariants.hpp"
#include "ldg/reduction.hpp"

namespace ldg {

// Branch S_(alpha sigma): T2 = K^2 (-sigma + alpha sqrt(1+mu)),
// T3 = -gamma2/2, with alpha = +-1 and sigma = sign(gamma3).
struct BranchId {
    int alpha = +1;
    int sigma = -1;
};

struct BranchState {
    double mu = 0.0;
    int alpha = +1, sigma = -1;
    double t2 = 0.0, t3 = 0.0;
    double q = 0.0;      // NaN when t2 < 0
    double omega = 0.0;  // NaN when t2 <= 0
    double chi = 0.0;    // q/K
    double theta = 0.0;  // sqrt(2/3) K^3/|gamma2| (1-omega); NaN for gamma2=0
    double zeta1 = 2.0;
    double zeta2 = 0.0;       // 2 (gamma3 + 3 T2) = 6 alpha K^2 sqrt(1+mu)
    double zeta2Paper = 0.0;  // 3 alpha K^2 sqrt(1+mu); differs by a factor 2
    double phi = 0.0;
    bool exists = false;    // mu >= -1
    bool physical = false;  // t2 >= 0
    bool omegaAdmissible = false;
};

// K = sqrt(|gamma3|/3), sigma = sign(gamma3), g = |gamma3| = 3K^2,
// L = ((3/2) gamma2^2)^(1/3), mu = 3 lambda / gamma3^2.
struct Derived {
    double K = 0.0;
    int sigma = 0;
    double g = 0.0;
    double L = 0.0;
    double gamma2 = 0.0;

    double muOf(double lambda) const { return lambda / (3.0 * K * K * K * K); }
    double lambdaOf(double mu) const { return 3.0 * K * K * K * K * mu; }
};

Derived derived(const ReducedPotential& rp);  // throws MulticriticalError

// Admissibility threshold on T2 for the given mode: L in paper mode,
// (27 gamma2^2 / 16)^(1/3) in exact mode.
double admissibilityThreshold(double gamma2, AdmissibilityMode mode);

BranchState branchState(BranchId id, double K, double gamma2, double mu,
                        AdmissibilityMode mode = AdmissibilityMode::Paper);
BranchState branchState(BranchId id, const ReducedPotential& rp, double mu,
                        AdmissibilityMode mode = AdmissibilityMode::Paper);

struct BranchTableRow {
    BranchId id;
    bool locallyStable = false;
    bool q0Zero = false;        // q -> 0 as mu -> 0 on the branch
    bool omega0InRange = false; // omega_0 in [0,1] at the branching point
};

// Rows for S_(++), S_(+-), S_(--); for S_(+-) the omega_0 column
// evaluates 4 |gamma3|^(3/2) >= 9 |gamma2|.
std::array<BranchTableRow, 3> branchTable(const ReducedPotential& rp);

bool smCondition(double gamma2, double gamma3);

// Raw formula L (L + 2 sigma K^2) / K^4 and the effective threshold:
// sigma=+1 clamped below at 0; sigma=-1 clamped at -1, and forced to
// -1 when L <= K^2 (the raw root is spurious there: T2 >= K^2 > L
// along S_(+-) for every mu >= -1).
double muStarRaw(int sigma, double K, double L);
double muStarEffective(int sigma, double K, double L);

// Unique root of Phi_-(mu) = 0 in (-1, 0) via bisection on the
// monotone cubic 2 s^3 + 3 s^2 - 1 + gamma2^2/(4 K^6) in s=sqrt(1+mu),
// to |dmu| <= 1e-12; -1 when gamma2^2 >= 4 K^6.
double mu0(double K, double gamma2);

// Energy on the alpha=+1 solutions:
//   Phi_sigma = K^6 [ (2+3mu) sigma - 2 (1+mu)^(3/2) ] - gamma2^2/4.
double phiSigma(int sigma, double K, double gamma2, double mu);

// (Phi_+, Phi_-) at the given mu.
std::pair<double, double> energies(const ReducedPotential& rp, double mu);

struct PhiStarResult {
    double raw = 0.0;        // Phi_- at the raw mu*_-
    double effective = 0.0;  // Phi_- at the effective mu*_-
    double closedForm = 0.0; // -L^3/6 - 2(1+eta)K^6 - L^2(3+2eta)K^2 + 2L(3+2eta)K^4
};

// Direct evaluation, self-checked against the closed form to 1e-10.
PhiStarResult phiStar(double K, double L);

enum class TransitionKind {
    NoTransition,
    FirstOrderUniaxialOnset,
    FirstOrderDirectBiaxial,
};

const char* toString(TransitionKind k);

struct TransitionReport {
    double K = 0.0, L = 0.0;
    int sigma = 0;
    double gamma2 = 0.0, gamma3 = 0.0;
    double muStarPlusRaw = 0.0, muStarMinusRaw = 0.0;
    double muStarPlus = 0.0, muStarMinus = 0.0;  // effective
    double mu0 = 0.0;
    double phiStarRaw = 0.0, phiStarEff = 0.0;
    double lambda0 = 0.0;  // mu0 gamma3^2 / 3
    TransitionKind kind = TransitionKind::NoTransition;
    BranchState transitionState;
    bool secondOrderExcluded = false;
    AdmissibilityMode mode = AdmissibilityMode::Paper;
};

TransitionReport classify(const ReducedPotential& rp,
                          AdmissibilityMode mode = AdmissibilityMode::Paper);

// Simplified potential evaluated in its two coordinate systems.
double simplifiedPotentialT2T3(const ReducedPotential& rp, double t2, double t3);
double simplifiedPotentialQOmega(const ReducedPotential& rp, double q,
                                 double omega);

// Orbit-space gradient (dPhi/dT2, dPhi/dT3) of the simplified potential.
std::pair<double, double> orbitGradient(const ReducedPotential& rp, double t2,
                                        double t3);

// Simplified potential as full-potential coefficients
// (-lambda, gamma2, gamma3, 0, 1, 1).
LdgCoefficients simplifiedAsCoefficients(const ReducedPotential& rp);

}  // namespace ldg

#endif
