#include "ldg/orbit.hpp"

#include <cmath>
#include <limits>

namespace ldg {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

Derived derived(const ReducedPotential& rp) {
    if (std::abs(rp.gamma3) < kDegeneracyEps)
        throw MulticriticalError("|gamma3| below threshold; mu undefined");
    Derived d;
    d.g = std::abs(rp.gamma3);
    d.sigma = rp.gamma3 > 0.0 ? +1 : -1;
    d.K = std::sqrt(d.g / 3.0);
    d.gamma2 = rp.gamma2;
    d.L = std::cbrt(1.5 * rp.gamma2 * rp.gamma2);
    return d;
}

double admissibilityThreshold(double gamma2, AdmissibilityMode mode) {
    double g2s = gamma2 * gamma2;
    return mode == AdmissibilityMode::Paper ? std::cbrt(1.5 * g2s)
                                            : std::cbrt(27.0 * g2s / 16.0);
}

BranchState branchState(BranchId id, double K, double gamma2, double mu,
                        AdmissibilityMode mode) {
    BranchState st;
    st.mu = mu;
    st.alpha = id.alpha;
    st.sigma = id.sigma;
    st.t3 = -gamma2 / 2.0;
    st.exists = mu >= -1.0;
    if (!st.exists) {
        st.t2 = st.q = st.omega = st.chi = st.theta = kNan;
        st.zeta2 = st.zeta2Paper = st.phi = kNan;
        return st;
    }

    const double s = std::sqrt(1.0 + mu);
    const double K2 = K * K;
    const double gamma3 = 3.0 * id.sigma * K2;
    st.t2 = K2 * (-id.sigma + id.alpha * s);
    st.physical = st.t2 >= 0.0;
    st.q = st.t2 >= 0.0 ? std::sqrt(st.t2) : kNan;
    st.chi = K > 0.0 ? st.q / K : kNan;
    if (st.t2 > 0.0) {
        st.omega =
            1.0 - std::sqrt(6.0 * st.t3 * st.t3 / (st.t2 * st.t2 * st.t2));
    } else {
        st.omega = kNan;
    }
    st.theta = (gamma2 != 0.0 && st.t2 > 0.0)
                   ? std::sqrt(2.0 / 3.0) * K2 * K / std::abs(gamma2) *
                         (1.0 - st.omega)
                   : kNan;

    st.zeta1 = 2.0;
    st.zeta2 = 2.0 * (gamma3 + 3.0 * st.t2);  // = 6 alpha K^2 sqrt(1+mu)
    st.zeta2Paper = 3.0 * id.alpha * K2 * s;

    // Phi on the branch; for alpha=+1 this coincides with phiSigma.
    const double u = s - id.alpha * id.sigma;
    st.phi = -id.alpha * K2 * K2 * K2 * u * u * (2.0 * s + id.alpha * id.sigma) -
             gamma2 * gamma2 / 4.0;

    st.omegaAdmissible =
        st.physical && st.t2 >= admissibilityThreshold(gamma2, mode);
    return st;
}

BranchState branchState(BranchId id, const ReducedPotential& rp, double mu,
                        AdmissibilityMode mode) {
    Derived d = derived(rp);
    return branchState(id, d.K, rp.gamma2, mu, mode);
}

bool smCondition(double gamma2, double gamma3) {
    return 4.0 * std::pow(std::abs(gamma3), 1.5) >= 9.0 * std::abs(gamma2);
}

std::array<BranchTableRow, 3> branchTable(const ReducedPotential& rp) {
    Derived d = derived(rp);
    const double gamma2 = rp.gamma2;

    auto row = [&](int alpha, int sigma) {
        BranchTableRow r;
        r.id = {alpha, sigma};
        r.locallyStable = alpha == +1;
        r.q0Zero = alpha == sigma;  // T2(mu=0) = K^2 (alpha - sigma)
        if (alpha == sigma) {
            // omega is singular as mu -> 0 unless gamma2 = 0 (then
            // T3 = 0 identically and omega = 1 on the whole branch).
            r.omega0InRange = gamma2 == 0.0;
        } else {
            r.omega0InRange = smCondition(gamma2, 3.0 * sigma * d.K * d.K);
        }
        return r;
    };
    return {row(+1, +1), row(+1, -1), row(-1, -1)};
}

double muStarRaw(int sigma, double K, double L) {
    return L * (L + 2.0 * sigma * K * K) / (K * K * K * K);
}

double muStarEffective(int sigma, double K, double L) {
    double raw = muStarRaw(sigma, K, L);
    if (sigma == +1) return std::max(raw, 0.0);
    // sigma = -1: for L <= K^2 the omega-condition holds along the
    // whole branch (T2 >= K^2 >= L), the raw root being spurious.
    if (L <= K * K) return -1.0;
    return std::max(raw, -1.0);
}

double mu0(double K, double gamma2) {
    const double c = gamma2 * gamma2 / (4.0 * K * K * K * K * K * K);
    auto f = [c](double s) { return 2.0 * s * s * s + 3.0 * s * s - 1.0 + c; };
    if (f(0.0) >= 0.0) return -1.0;  // gamma2^2 >= 4 K^6
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 5e-13) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double s = 0.5 * (lo + hi);
    return s * s - 1.0;
}

double phiSigma(int sigma, double K, double gamma2, double mu) {
    const double K6 = K * K * K * K * K * K;
    const double s3 = std::pow(1.0 + mu, 1.5);
    return K6 * ((2.0 + 3.0 * mu) * sigma - 2.0 * s3) -
           gamma2 * gamma2 / 4.0;
}

std::pair<double, double> energies(const ReducedPotential& rp, double mu) {
    Derived d = derived(rp);
    return {phiSigma(+1, d.K, rp.gamma2, mu), phiSigma(-1, d.K, rp.gamma2, mu)};
}

PhiStarResult phiStar(double K, double L) {
    if (K <= 0.0 || L < 0.0) throw DomainError("phiStar requires K > 0, L >= 0");
    // L fixes gamma2^2 = (2/3) L^3.
    const double g2sq = 2.0 / 3.0 * L * L * L;
    const double gamma2 = std::sqrt(g2sq);

    PhiStarResult r;
    double muRaw = std::max(muStarRaw(-1, K, L), -1.0);
    r.raw = phiSigma(-1, K, gamma2, muRaw);
    r.effective = phiSigma(-1, K, gamma2, muStarEffective(-1, K, L));

    const double K2 = K * K, K6 = K2 * K2 * K2;
    const double eta = std::abs((L - K2) / K2);
    r.closedForm = -L * L * L / 6.0 - 2.0 * (1.0 + eta) * K6 -
                   L * L * (3.0 + 2.0 * eta) * K2 +
                   2.0 * L * (3.0 + 2.0 * eta) * K2 * K2;

    double scale = std::max({1.0, std::abs(r.raw), std::abs(r.closedForm)});
    if (std::abs(r.raw - r.closedForm) > 1e-10 * scale)
        throw Error("phiStar: direct evaluation disagrees with closed form");
    return r;
}

const char* toString(TransitionKind k) {
    switch (k) {
        case TransitionKind::NoTransition: return "no-transition";
        case TransitionKind::FirstOrderUniaxialOnset:
            return "first-order-uniaxial-onset";
        case TransitionKind::FirstOrderDirectBiaxial:
            return "first-order-direct-biaxial";
    }
    return "?";
}

TransitionReport classify(const ReducedPotential& rp, AdmissibilityMode mode) {
    Derived d = derived(rp);
    TransitionReport rep;
    rep.K = d.K;
    rep.sigma = d.sigma;
    rep.gamma2 = rp.gamma2;
    rep.gamma3 = rp.gamma3;
    rep.mode = mode;
    rep.L = admissibilityThreshold(rp.gamma2, mode);

    rep.muStarPlusRaw = muStarRaw(+1, d.K, rep.L);
    rep.muStarMinusRaw = muStarRaw(-1, d.K, rep.L);
    rep.muStarPlus = muStarEffective(+1, d.K, rep.L);
    rep.muStarMinus = muStarEffective(-1, d.K, rep.L);
    rep.mu0 = mu0(d.K, rp.gamma2);
    rep.lambda0 = d.lambdaOf(rep.mu0);

    rep.phiStarRaw =
        phiSigma(-1, d.K, rp.gamma2, std::max(rep.muStarMinusRaw, -1.0));
    rep.phiStarEff = phiSigma(-1, d.K, rp.gamma2, rep.muStarMinus);

    // No stable branch emanates continuously from the isotropic state
    // while meeting the omega-condition at mu = 0 (degenerate gamma2=0
    // aside, where the maximally biaxial branch does exactly that).
    rep.secondOrderExcluded = true;
    for (const auto& row : branchTable(rp))
        if (row.locallyStable && row.q0Zero && row.omega0InRange)
            rep.secondOrderExcluded = false;

    if (d.sigma == -1) {
        rep.kind = rep.mu0 > rep.muStarMinus
                       ? TransitionKind::FirstOrderDirectBiaxial
                       : TransitionKind::FirstOrderUniaxialOnset;
        double muT = std::max(rep.mu0, rep.muStarMinus);
        rep.transitionState = branchState({+1, -1}, d.K, rp.gamma2, muT, mode);
    } else {
        // gamma3 > 0: the stable branch S_(++) becomes admissible only
        // at mu*_+ with omega = 0 on the threshold.
        rep.kind = TransitionKind::FirstOrderUniaxialOnset;
        rep.transitionState =
            branchState({+1, +1}, d.K, rp.gamma2, rep.muStarPlus, mode);
    }
    return rep;
}

double simplifiedPotentialT2T3(const ReducedPotential& rp, double t2,
                               double t3) {
    return -rp.lambda * t2 + rp.gamma2 * t3 + rp.gamma3 * t2 * t2 +
           t2 * t2 * t2 + t3 * t3;
}

double simplifiedPotentialQOmega(const ReducedPotential& rp, double q,
                                 double omega) {
    const double q2 = q * q;
    const double om1 = 1.0 - omega;
    return -rp.lambda * q2 + rp.gamma2 / std::sqrt(6.0) * om1 * q2 * q +
           rp.gamma3 * q2 * q2 + (1.0 + om1 * om1 / 6.0) * q2 * q2 * q2;
}

std::pair<double, double> orbitGradient(const ReducedPotential& rp, double t2,
                                        double t3) {
    return {-rp.lambda + 2.0 * rp.gamma3 * t2 + 3.0 * t2 * t2,
            rp.gamma2 + 2.0 * t3};
}

LdgCoefficients simplifiedAsCoefficients(const ReducedPotential& rp) {
    return {-rp.lambda, rp.gamma2, rp.gamma3, 0.0, 1.0, 1.0};
}

}  // namespace ldg
