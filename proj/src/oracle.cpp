#include "ldg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace ldg {

namespace {

double norm(const StateVector& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;

// Newton refinement on the gradient (Hessian by central differences of
// the analytic gradient); first-order descent stalls around
// |grad| ~ 1e-8 in double precision, short of the 1e-10 contract.
bool newtonPolish(const LdgCoefficients& c, StateVector& x, double tolGrad) {
    for (int iter = 0; iter < 40; ++iter) {
        StateVector g = gradLdg(c, x);
        double gn = norm(g);
        if (gn <= tolGrad) return true;

        const double h = 1e-6;
        double H[5][6];
        for (int j = 0; j < 5; ++j) {
            StateVector xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            StateVector gp = gradLdg(c, xp), gm = gradLdg(c, xm);
            for (int i = 0; i < 5; ++i) H[i][j] = (gp[i] - gm[i]) / (2.0 * h);
        }
        for (int i = 0; i < 5; ++i) H[i][5] = g[i];

        // Gaussian elimination with partial pivoting.
        for (int k = 0; k < 5; ++k) {
            int piv = k;
            for (int i = k + 1; i < 5; ++i)
                if (std::abs(H[i][k]) > std::abs(H[piv][k])) piv = i;
            if (std::abs(H[piv][k]) < 1e-14) return gn <= tolGrad;
            if (piv != k)
                for (int j = 0; j < 6; ++j) std::swap(H[k][j], H[piv][j]);
            for (int i = k + 1; i < 5; ++i) {
                double f = H[i][k] / H[k][k];
                for (int j = k; j < 6; ++j) H[i][j] -= f * H[k][j];
            }
        }
        StateVector d{};
        for (int i = 4; i >= 0; --i) {
            double s = H[i][5];
            for (int j = i + 1; j < 5; ++j) s -= H[i][j] * d[j];
            d[i] = s / H[i][i];
        }

        StateVector xn;
        for (int i = 0; i < 5; ++i) xn[i] = x[i] - d[i];
        if (norm(gradLdg(c, xn)) >= gn) return gn <= tolGrad;
        x = xn;
    }
    return norm(gradLdg(c, x)) <= tolGrad;
}

}  // namespace

bool descend(const LdgCoefficients& c, StateVector& x, double tolGrad,
             int maxIter) {
    double step = 0.1;
    // Coarse phase: descend until the gradient is small enough for the
    // Newton polish to take over.
    const double coarseTol = std::max(tolGrad, 1e-6);
    for (int iter = 0; iter < maxIter; ++iter) {
        StateVector g = gradLdg(c, x);
        double gn = norm(g);
        if (gn <= coarseTol) break;

        double phi0 = evalLdg(c, x);
        bool accepted = false;
        while (step > 1e-18) {
            StateVector xn;
            for (int i = 0; i < 5; ++i) xn[i] = x[i] - step * g[i];
            if (evalLdg(c, xn) <= phi0 - kArmijo * step * gn * gn) {
                x = xn;
                step = std::min(step * 2.0, 1e6);
                accepted = true;
                break;
            }
            step *= kShrink;
        }
        if (!accepted) break;
    }
    if (norm(gradLdg(c, x)) <= tolGrad) return true;
    return newtonPolish(c, x, tolGrad);
}

MinimaReport minimizeFromStarts(const LdgCoefficients& c,
                                const std::vector<StateVector>& starts,
                                const MinimizationConfig& cfg) {
    MinimaReport rep;
    for (const auto& start : starts) {
        StateVector x = start;
        if (!descend(c, x, cfg.tolGrad, cfg.maxIter)) {
            ++rep.unconverged;
            continue;
        }
        ++rep.converged;
        InvariantPair p = evalInvariants(x);
        double phi = evalLdg(c, p);

        bool merged = false;
        for (auto& cl : rep.clusters) {
            if (std::abs(cl.t2 - p.t2) <= cfg.mergeTol &&
                std::abs(cl.t3 - p.t3) <= cfg.mergeTol) {
                cl.t2 = (cl.t2 * cl.count + p.t2) / (cl.count + 1);
                cl.t3 = (cl.t3 * cl.count + p.t3) / (cl.count + 1);
                cl.phi = (cl.phi * cl.count + phi) / (cl.count + 1);
                ++cl.count;
                merged = true;
                break;
            }
        }
        if (!merged) {
            MinimaCluster cl;
            cl.t2 = p.t2;
            cl.t3 = p.t3;
            cl.phi = phi;
            cl.count = 1;
            cl.representative = x;
            rep.clusters.push_back(cl);
        }
    }
    if (rep.converged == 0)
        throw ConvergenceError("no start converged (starts=" +
                               std::to_string(starts.size()) + ")");

    // Probe each cluster representative with random small perturbations;
    // a genuine local minimum may not be improved upon.
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (auto& cl : rep.clusters) {
        double phi0 = evalLdg(c, cl.representative);
        cl.verifiedMin = true;
        for (int t = 0; t < 50; ++t) {
            StateVector d;
            for (int i = 0; i < 5; ++i) d[i] = nd(rng);
            double dn = norm(d);
            StateVector y;
            for (int i = 0; i < 5; ++i)
                y[i] = cl.representative[i] + 1e-4 * d[i] / dn;
            if (evalLdg(c, y) < phi0 - 1e-12) {
                cl.verifiedMin = false;
                break;
            }
        }
        double t2c = cl.t2 * cl.t2 * cl.t2;
        cl.uniaxial = std::abs(4.0 * t2c - 27.0 * cl.t3 * cl.t3) <=
                      1e-6 * std::max(1.0, std::abs(t2c));
    }

    std::sort(rep.clusters.begin(), rep.clusters.end(),
              [](const MinimaCluster& a, const MinimaCluster& b) {
                  if (a.phi != b.phi) return a.phi < b.phi;
                  if (a.t2 != b.t2) return a.t2 < b.t2;
                  return a.t3 < b.t3;
              });
    rep.globalIndex = 0;
    for (std::size_t i = 0; i < rep.clusters.size(); ++i)
        if (rep.clusters[i].verifiedMin) {
            rep.globalIndex = i;
            break;
        }
    return rep;
}

MinimaReport minimizeFull(const LdgCoefficients& c,
                          const MinimizationConfig& cfg,
                          const std::vector<StateVector>& extraStarts) {
    if (cfg.starts < 1 || cfg.radius <= 0.0)
        throw DomainError("starts >= 1 and radius > 0 required");
    if (cfg.requireStability && !(c.stableC5() && c.stableC5C6()))
        throw DomainError(
            "potential fails the coercivity conditions c5 > 0, c5 + 6 c6 > 0 "
            "(pass the override flag to search anyway)");

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);

    std::vector<StateVector> starts;
    starts.reserve(cfg.starts + extraStarts.size());
    for (int s = 0; s < cfg.starts; ++s) {
        StateVector v;
        for (int i = 0; i < 5; ++i) v[i] = nd(rng);
        double n = norm(v);
        double r = cfg.radius * std::pow(ud(rng), 0.2);
        for (int i = 0; i < 5; ++i) v[i] = (n > 0.0) ? v[i] * r / n : 0.0;
        starts.push_back(v);
    }
    starts.insert(starts.end(), extraStarts.begin(), extraStarts.end());
    return minimizeFromStarts(c, starts, cfg);
}

double uniaxialPotential(const LdgCoefficients& c, double a) {
    const double a2 = a * a;
    return 3.0 * c.c1 * a2 + 2.0 * c.c2 * a2 * a + 9.0 * c.c3 * a2 * a2 +
           6.0 * c.c4 * a2 * a2 * a + (27.0 * c.c5 + 4.0 * c.c6) * a2 * a2 * a2;
}

double uniaxialDerivative(const LdgCoefficients& c, double a) {
    return 6.0 * c.c1 * a + 6.0 * c.c2 * a * a + 36.0 * c.c3 * a * a * a +
           30.0 * c.c4 * a * a * a * a +
           6.0 * (27.0 * c.c5 + 4.0 * c.c6) * a * a * a * a * a;
}

namespace {

double uniaxialD2(const LdgCoefficients& c, double a) {
    return 6.0 * c.c1 + 12.0 * c.c2 * a + 108.0 * c.c3 * a * a +
           120.0 * c.c4 * a * a * a +
           30.0 * (27.0 * c.c5 + 4.0 * c.c6) * a * a * a * a;
}

}  // namespace

std::vector<UniaxialCriticalPoint> uniaxialBranch(const LdgCoefficients& c) {
    // Phi_u'(a)/a is a quartic; isolate its real roots by dense sign
    // scanning inside the Cauchy bound, then bisect and polish.
    std::array<double, 5> q = {6.0 * c.c1, 6.0 * c.c2, 36.0 * c.c3,
                               30.0 * c.c4, 6.0 * (27.0 * c.c5 + 4.0 * c.c6)};
    int deg = 4;
    while (deg > 0 && q[deg] == 0.0) --deg;

    std::vector<double> roots = {0.0};
    if (deg >= 1) {
        double lead = std::abs(q[deg]);
        double maxc = 0.0;
        for (int i = 0; i < deg; ++i) maxc = std::max(maxc, std::abs(q[i]));
        double bound = 1.0 + maxc / lead;

        auto qeval = [&](double a) {
            double v = 0.0;
            for (int i = deg; i >= 0; --i) v = v * a + q[i];
            return v;
        };

        const int n = 40000;
        double prevA = -bound, prevV = qeval(prevA);
        for (int i = 1; i <= n; ++i) {
            double a = -bound + 2.0 * bound * i / n;
            double v = qeval(a);
            if (prevV == 0.0) {
                roots.push_back(prevA);
            } else if (v != 0.0 && prevV * v < 0.0) {
                double lo = prevA, hi = a, flo = prevV;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double fm = qeval(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (flo * fm < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                roots.push_back(0.5 * (lo + hi));
            }
            prevA = a;
            prevV = v;
        }
        if (qeval(bound) == 0.0) roots.push_back(bound);
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) {
                                return std::abs(a - b) < 1e-12;
                            }),
                roots.end());

    std::vector<UniaxialCriticalPoint> out;
    for (double a : roots) {
        UniaxialCriticalPoint p;
        p.a = a;
        p.t2 = 3.0 * a * a;
        p.t3 = 2.0 * a * a * a;
        p.phi = uniaxialPotential(c, a);
        double d2 = uniaxialD2(c, a);
        double scale = 1.0;
        for (int i = 0; i <= 4; ++i) scale = std::max(scale, std::abs(q[i]));
        if (std::abs(d2) <= 1e-9 * scale)
            p.type = 0;
        else
            p.type = d2 > 0.0 ? +1 : -1;
        out.push_back(p);
    }
    return out;
}

void markFullMinima(std::vector<UniaxialCriticalPoint>& points,
                    const MinimaReport& report, double tol) {
    for (auto& p : points)
        for (const auto& cl : report.clusters)
            if (cl.verifiedMin && std::abs(cl.t2 - p.t2) <= tol &&
                std::abs(cl.t3 - p.t3) <= tol)
                p.fullMinimum = true;
}

AgreementReport compare(const ReducedPotential& rp, double mu,
                        const MinimaReport& report) {
    AgreementReport ar;
    ar.predicted.push_back({"isotropic", 0.0, 0.0, 0.0});

    Derived d = derived(rp);
    BranchState st = branchState({+1, d.sigma}, d.K, rp.gamma2, mu,
                                 AdmissibilityMode::Exact);
    if (st.exists && st.physical && st.t2 > 0.0) {
        double margin = 4.0 * st.t2 * st.t2 * st.t2 - 27.0 * st.t3 * st.t3;
        if (margin >= -1e-8)
            ar.predicted.push_back({"branch", st.t2, st.t3, st.phi});
    }

    // Analytic global minimum (possibly two, degenerate).
    std::size_t best = 0;
    for (std::size_t i = 1; i < ar.predicted.size(); ++i)
        if (ar.predicted[i].phi < ar.predicted[best].phi) best = i;
    std::vector<std::size_t> globals = {best};
    for (std::size_t i = 0; i < ar.predicted.size(); ++i)
        if (i != best &&
            std::abs(ar.predicted[i].phi - ar.predicted[best].phi) <=
                kCoexistenceTol)
            globals.push_back(i);
    ar.coexistence = globals.size() > 1;

    const MinimaCluster& g = report.globalMin();
    ar.oracleT2 = g.t2;
    ar.oracleT3 = g.t3;
    ar.oraclePhi = g.phi;

    auto matchCluster = [&](const AgreementCandidate& cand) -> const MinimaCluster* {
        for (const auto& cl : report.clusters) {
            if (!cl.verifiedMin) continue;
            if (std::abs(cl.t2 - cand.t2) <= kCompareTolT &&
                std::abs(cl.t3 - cand.t3) <= kCompareTolT &&
                std::abs(cl.phi - cand.phi) <= kCompareTolPhi)
                return &cl;
        }
        return nullptr;
    };

    // The oracle's global cluster must match one predicted global, and
    // every predicted global must have been found.
    bool globalMatched = false;
    bool allFound = true;
    for (std::size_t idx : globals) {
        const auto& cand = ar.predicted[idx];
        const MinimaCluster* cl = matchCluster(cand);
        if (cl == nullptr) {
            allFound = false;
            continue;
        }
        if (std::abs(cl->t2 - g.t2) <= kCompareTolT &&
            std::abs(cl->t3 - g.t3) <= kCompareTolT) {
            globalMatched = true;
            ar.deltaT2 = std::abs(cl->t2 - cand.t2);
            ar.deltaT3 = std::abs(cl->t3 - cand.t3);
            ar.deltaPhi = std::abs(cl->phi - cand.phi);
        }
    }
    ar.coexistenceSeen = ar.coexistence && allFound;
    ar.agrees = globalMatched && allFound;
    if (!ar.agrees)
        throw MismatchError("oracle disagrees with analytic prediction:\n" +
                            ar.serialize());
    return ar;
}

std::string MinimaReport::serialize() const {
    std::ostringstream os;
    os << "{\n  \"converged\": " << converged
       << ",\n  \"unconverged\": " << unconverged << ",\n  \"clusters\": [\n";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& cl = clusters[i];
        os << "    {\"t2\": " << fmt(cl.t2) << ", \"t3\": " << fmt(cl.t3)
           << ", \"phi\": " << fmt(cl.phi) << ", \"count\": " << cl.count
           << ", \"uniaxial\": " << (cl.uniaxial ? "true" : "false")
           << ", \"verifiedMin\": " << (cl.verifiedMin ? "true" : "false")
           << "}" << (i + 1 < clusters.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"globalIndex\": " << globalIndex << "\n}\n";
    return os.str();
}

std::string AgreementReport::serialize() const {
    std::ostringstream os;
    os << "{\n  \"predicted\": [\n";
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const auto& p = predicted[i];
        os << "    {\"label\": \"" << p.label << "\", \"t2\": " << fmt(p.t2)
           << ", \"t3\": " << fmt(p.t3) << ", \"phi\": " << fmt(p.phi) << "}"
           << (i + 1 < predicted.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"oracle\": {\"t2\": " << fmt(oracleT2)
       << ", \"t3\": " << fmt(oracleT3) << ", \"phi\": " << fmt(oraclePhi)
       << "},\n  \"delta\": {\"t2\": " << fmt(deltaT2)
       << ", \"t3\": " << fmt(deltaT3) << ", \"phi\": " << fmt(deltaPhi)
       << "},\n  \"coexistence\": " << (coexistence ? "true" : "false")
       << ",\n  \"coexistenceSeen\": " << (coexistenceSeen ? "true" : "false")
       << ",\n  \"agrees\": " << (agrees ? "true" : "false") << "\n}\n";
    return os.str();
}

}  // namespace ldg
