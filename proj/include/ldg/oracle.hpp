#ifndef LDG_ORACLE_HPP
#define LDG_ORACLE_HPP

// Brute-force verification of the orbit-space analysis: seeded
// multi-start descent on the full degree-6 potential over R^5, minima
// clustered by their (T2, T3) fingerprint, plus a one-dimensional
// uniaxial-stratum study.

#include <cstdint>
#include <string>
#include <vector>

#include "ldg/invariants.hpp"
#include "ldg/orbit.hpp"

namespace ldg {

struct MinimizationConfig {
    int starts = 200;
    double radius = 2.0;  // sampling ball; callers scale by predicted q
    std::uint64_t seed = 0;
    double tolGrad = 1e-10;
    int maxIter = 10000;
    double mergeTol = 1e-6;
    bool requireStability = true;  // honor c5 > 0, c5 + 6 c6 > 0
};

struct MinimaCluster {
    double t2 = 0.0, t3 = 0.0;  // centroid over members
    double phi = 0.0;
    int count = 0;
    bool uniaxial = false;      // 4 T2^3 - 27 T3^2 ~ 0
    bool verifiedMin = false;   // survived random-perturbation probing
    StateVector representative{};
};

struct MinimaReport {
    std::vector<MinimaCluster> clusters;  // sorted by phi ascending
    int converged = 0;
    int unconverged = 0;
    std::size_t globalIndex = 0;  // lowest-energy verified cluster

    const MinimaCluster& globalMin() const { return clusters.at(globalIndex); }
    std::string serialize() const;  // deterministic JSON-shaped text
};

struct UniaxialCriticalPoint {
    double a = 0.0;  // amplitude in z(a) = (2a, 0, 0, -a, 0)
    double t2 = 0.0, t3 = 0.0;
    double phi = 0.0;
    int type = 0;  // +1 minimum of Phi_u, -1 maximum, 0 degenerate
    bool fullMinimum = false;  // matches a cluster of the 5-D search
};

struct AgreementCandidate {
    std::string label;  // "isotropic" or "branch"
    double t2 = 0.0, t3 = 0.0, phi = 0.0;
};

struct AgreementReport {
    std::vector<AgreementCandidate> predicted;  // analytic global minima
    double oracleT2 = 0.0, oracleT3 = 0.0, oraclePhi = 0.0;
    double deltaT2 = 0.0, deltaT3 = 0.0, deltaPhi = 0.0;
    bool coexistence = false;  // two degenerate global minima
    bool coexistenceSeen = false;
    bool agrees = false;
    std::string serialize() const;
};

// Tolerances used by compare().
inline constexpr double kCompareTolT = 1e-6;
inline constexpr double kCompareTolPhi = 1e-8;
inline constexpr double kCoexistenceTol = 1e-6;

// Gradient descent with Armijo backtracking from the given start;
// returns true on |grad| <= tolGrad within maxIter.
bool descend(const LdgCoefficients& c, StateVector& x, double tolGrad,
             int maxIter);

// Multi-start search over explicit starts, merged in start order.
MinimaReport minimizeFromStarts(const LdgCoefficients& c,
                                const std::vector<StateVector>& starts,
                                const MinimizationConfig& cfg);

// Seeded uniform-in-ball starts plus the injected extra starts
// (deterministic), then minimizeFromStarts.
MinimaReport minimizeFull(const LdgCoefficients& c,
                          const MinimizationConfig& cfg,
                          const std::vector<StateVector>& extraStarts = {});

// Critical points of Phi restricted to z(a) = (2a, 0, 0, -a, 0), i.e.
// of Phi_u(a) = 3 c1 a^2 + 2 c2 a^3 + 9 c3 a^4 + 6 c4 a^5 + (27 c5 + 4 c6) a^6.
std::vector<UniaxialCriticalPoint> uniaxialBranch(const LdgCoefficients& c);

double uniaxialPotential(const LdgCoefficients& c, double a);
double uniaxialDerivative(const LdgCoefficients& c, double a);

// Flags uniaxial critical points whose (t2, t3) matches a verified
// cluster of a 5-D search over the same coefficients.
void markFullMinima(std::vector<UniaxialCriticalPoint>& points,
                    const MinimaReport& report, double tol = 1e-6);

// Checks the analytic global minimum (isotropic vs admissible branch)
// against the oracle's global cluster; throws MismatchError on
// disagreement beyond the stated tolerances.
AgreementReport compare(const ReducedPotential& rp, double mu,
                        const MinimaReport& report);

}  // namespace ldg

#endif
