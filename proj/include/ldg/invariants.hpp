#ifndef LDG_INVARIANTS_HPP
#define LDG_INVARIANTS_HPP

// Q-tensor <-> 5-vector correspondence, SO(3) action, the invariants
// T2 = (1/2)Tr Q^2 and T3 = (1/3)Tr Q^3, low order covariants, and
// direct evaluation of the degree-6 potential and its gradient on R^5.

#include "ldg/linalg.hpp"

namespace ldg {

// Five real components (z1..z5) of the traceless symmetric order
// tensor; also used for the post-change coordinates x1..x5.
using StateVector = Vec5;

struct InvariantPair {
    double t2 = 0.0;
    double t3 = 0.0;
};

// Amplitude q = sqrt(T2) and biaxiality omega = 1 - sqrt(6 T3^2 / T2^3).
// Defined only for q > 0; omega is reported as-is even when floating
// error pushes it marginally outside [0,1].
struct PhysicalState {
    double q = 0.0;
    double omega = 0.0;
};

// The six real parameters of the full degree-6 potential
//   Phi = c1 T2 + c2 T3 + c3 T2^2 + c4 T2 T3 + c5 T2^3 + c6 T3^2,
// with c1 = -lambda.
struct LdgCoefficients {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0, c6 = 0.0;

    double lambda() const { return -c1; }

    // Coercivity warnings (c5 > 0 and c5 + 6 c6 > 0 are required for
    // the potential to be bounded below); informational only.
    bool stableC5() const { return c5 > 0.0; }
    bool stableC5C6() const { return c5 + 6.0 * c6 > 0.0; }
};

enum class AdmissibilityMode {
    Paper,  // Delta = T2^3 - 6 T3^2 >= 0 (the omega-condition)
    Exact,  // 4 T2^3 - 27 T3^2 >= 0 (true image of R^5)
};

// Tolerance applied on Delta (resp. the exact bound) by admissible().
inline constexpr double kAdmissibilityTol = 1e-12;

Mat3 toMatrix(const StateVector& v);
StateVector toState(const Mat3& q);

InvariantPair evalInvariants(const StateVector& v);

// Throws DomainError for t2 <= 0 (change of variable singular at q=0).
PhysicalState toPhysical(const InvariantPair& p);

bool admissible(const InvariantPair& p, AdmissibilityMode mode);

// Quadratic basic covariant F2 and the degree 3/4 products
// F3 = T2 x, F4a = T3 x, F4b = T2 F2.
StateVector covariantF2(const StateVector& x);
StateVector covariantF3(const StateVector& x);
StateVector covariantF4a(const StateVector& x);
StateVector covariantF4b(const StateVector& x);

// toState(R Q(v) R^T); the induced 5-dimensional representation.
StateVector inducedAction(const Rotation& r, const StateVector& v);

double evalLdg(const LdgCoefficients& c, const InvariantPair& p);
double evalLdg(const LdgCoefficients& c, const StateVector& v);
StateVector gradLdg(const LdgCoefficients& c, const StateVector& v);

// True when Q(v) has a repeated eigenvalue (uniaxial or isotropic),
// decided on the characteristic discriminant 4 T2^3 - 27 T3^2.
bool hasRepeatedEigenvalue(const StateVector& v, double tol = 1e-8);

// Eigenvalues of Q(v), ascending; independent closed-form route used
// by tests against the invariant-based criteria.
Vec3 eigenvaluesSym(const Mat3& m);

}  // namespace ldg

#endif
