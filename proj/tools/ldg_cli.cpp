// Command-line front end: reduction of degree-6 potentials to the
// three-parameter simplified form, branch sweeps, transition
// classification, parameter-plane scans and end-to-end verification
// against the brute-force minimizer.
//
// Exit codes: 0 ok, 1 input error, 2 degeneracy, 3 regime error,
// 4 verification mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ldg/oracle.hpp"
#include "ldg/orbit.hpp"
#include "ldg/reduction.hpp"

namespace {

using namespace ldg;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmtShort(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ostream& openOut(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw DomainError("cannot open output file: " + path);
    return file;
}

AdmissibilityMode parseMode(const std::string& s) {
    if (s == "paper") return AdmissibilityMode::Paper;
    if (s == "exact") return AdmissibilityMode::Exact;
    throw DomainError("admissibility must be 'paper' or 'exact', got: " + s);
}

std::string quadExtText(const QuadExt& v) {
    if (v.b() == 0) return formatRational(v.a());
    return formatRational(v.a()) + " + " + formatRational(v.b()) + "*sqrt(" +
           formatRational(v.d()) + ")";
}

// Diagonal state realizing given invariants: the eigenvalues are the
// roots of x^3 - t2 x - t3, real whenever 4 t2^3 >= 27 t3^2.
StateVector diagonalState(double t2, double t3) {
    if (t2 <= 0.0) return {0, 0, 0, 0, 0};
    double r = 2.0 * std::sqrt(t2 / 3.0);
    double arg = 3.0 * std::sqrt(3.0) * t3 / (2.0 * std::pow(t2, 1.5));
    arg = std::clamp(arg, -1.0, 1.0);
    double phi = std::acos(arg);
    double e1 = r * std::cos(phi / 3.0);
    double e2 = r * std::cos(phi / 3.0 - 2.0 * M_PI / 3.0);
    return {e1, 0, 0, e2, 0};
}

// ---------------------------------------------------------------- reduce

int cmdReduce(const std::string& path, bool rational) {
    auto records = readCoefficientRecords(readFile(path));
    if (records.empty()) throw DomainError("no coefficient records in " + path);
    for (const auto& rc : records) {
        LdgCoefficients c = toDoubleCoefficients(rc);
        ReducedPotential rp = reduce(c);
        ChangeOfVariables k = solveK(c);
        std::cout << "lambda  = " << fmt(rp.lambda) << "\n"
                  << "gamma2  = " << fmt(rp.gamma2) << "\n"
                  << "gamma3  = " << fmt(rp.gamma3) << "\n"
                  << "k2      = " << fmt(k.k2) << "\n"
                  << "k3      = " << fmt(k.k3) << "\n"
                  << "k4      = " << fmt(k.k4) << "\n";
        if (rational) {
            ChangeOfVariablesExact ke = solveKExact(rc);
            std::cout << "k2      = " << quadExtText(ke.k2) << "\n"
                      << "k3      = " << formatRational(ke.k3) << "\n"
                      << "k4      = " << quadExtText(ke.k4) << "\n"
                      << "disc    = " << formatRational(ke.disc) << "\n";
        }
        // Exact certification of the target normalization in the
        // quadratic extension holding the solved constants.
        ChangeOfVariablesExact ke = solveKExact(rc);
        auto q = [&](const Rational& r) {
            return QuadExt::fromRational(r, ke.disc);
        };
        QuadExt g4 = q(rc[3]) + q(3 * rc[1]) * ke.k2 + q(2 * rc[0]) * q(ke.k3) +
                     q(9 * rc[0]) * ke.k4;
        QuadExt g5 = q(rc[4]) + q(rc[0]) * ke.k2 * ke.k2 + q(4 * rc[2]) * ke.k2 +
                     q(2 * rc[1]) * ke.k4;
        QuadExt g6 = q(rc[5]) + q(3 * rc[1]) * q(ke.k3);
        bool certified = g4.equalsRational(0) && g5.equalsRational(1) &&
                         g6.equalsRational(1);
        std::cout << "certified: "
                  << (certified ? "exact (gamma4,gamma5,gamma6) = (0,1,1)"
                                : "FAILED")
                  << "\n";
        if (!certified) return 4;
    }
    return 0;
}

// -------------------------------------------------------------- branches

int cmdBranches(double gamma2, double gamma3, double muMin, double muMax,
                int steps, AdmissibilityMode mode, const std::string& outPath) {
    Derived d = derived({0.0, gamma2, gamma3});
    std::ofstream file;
    std::ostream& out = openOut(outPath, file);
    out << "# type=branches\n"
        << "# K=" << fmt(d.K) << "\n"
        << "# gamma2=" << fmt(gamma2) << "\n"
        << "# gamma3=" << fmt(gamma3) << "\n"
        << "# admissibility="
        << (mode == AdmissibilityMode::Paper ? "paper" : "exact") << "\n"
        << "mu,alpha,sigma,T2,T3,q,omega,zeta2,phi,exists,physical,admissible\n";
    for (int i = 0; i < steps; ++i) {
        double mu = muMin + (muMax - muMin) * i / (steps - 1);
        for (auto [alpha, sigma] :
             {std::pair{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}) {
            BranchState s = branchState({alpha, sigma}, d.K, gamma2, mu, mode);
            out << fmt(mu) << ',' << alpha << ',' << sigma << ',' << fmt(s.t2)
                << ',' << fmt(s.t3) << ',' << fmt(s.q) << ',' << fmt(s.omega)
                << ',' << fmt(s.zeta2) << ',' << fmt(s.phi) << ','
                << (s.exists ? 1 : 0) << ',' << (s.physical ? 1 : 0) << ','
                << (s.omegaAdmissible ? 1 : 0) << "\n";
        }
    }
    return 0;
}

// -------------------------------------------------------------- classify

void printReport(const TransitionReport& rep) {
    const BranchState& t = rep.transitionState;
    std::cout << "{\n"
              << "  \"kind\": \"" << toString(rep.kind) << "\",\n"
              << "  \"K\": " << fmt(rep.K) << ",\n"
              << "  \"L\": " << fmt(rep.L) << ",\n"
              << "  \"sigma\": " << rep.sigma << ",\n"
              << "  \"gamma2\": " << fmt(rep.gamma2) << ",\n"
              << "  \"gamma3\": " << fmt(rep.gamma3) << ",\n"
              << "  \"muStarPlus\": " << fmt(rep.muStarPlus) << ",\n"
              << "  \"muStarMinus\": " << fmt(rep.muStarMinus) << ",\n"
              << "  \"muStarPlusRaw\": " << fmt(rep.muStarPlusRaw) << ",\n"
              << "  \"muStarMinusRaw\": " << fmt(rep.muStarMinusRaw) << ",\n"
              << "  \"mu0\": " << fmt(rep.mu0) << ",\n"
              << "  \"lambda0\": " << fmt(rep.lambda0) << ",\n"
              << "  \"phiStarRaw\": " << fmt(rep.phiStarRaw) << ",\n"
              << "  \"phiStarEff\": " << fmt(rep.phiStarEff) << ",\n"
              << "  \"secondOrderExcluded\": "
              << (rep.secondOrderExcluded ? "true" : "false") << ",\n"
              << "  \"transitionState\": {\n"
              << "    \"mu\": " << fmt(t.mu) << ",\n"
              << "    \"T2\": " << fmt(t.t2) << ",\n"
              << "    \"T3\": " << fmt(t.t3) << ",\n"
              << "    \"q\": " << fmt(t.q) << ",\n"
              << "    \"omega\": " << fmt(t.omega) << "\n"
              << "  }\n"
              << "}\n";
    if (rep.secondOrderExcluded)
        std::cout << "note: no second-order biaxial branching at lambda=0\n";
}

int cmdClassify(const std::string& path, std::optional<double> gamma2,
                std::optional<double> gamma3, AdmissibilityMode mode) {
    if (gamma2 && gamma3) {
        printReport(classify({0.0, *gamma2, *gamma3}, mode));
        return 0;
    }
    if (path.empty())
        throw DomainError("classify needs either a file or --gamma2/--gamma3");
    for (const auto& rc : readCoefficientRecords(readFile(path))) {
        ReducedPotential rp = reduce(toDoubleCoefficients(rc));
        printReport(classify(rp, mode));
    }
    return 0;
}

// ------------------------------------------------------------------ scan

int cmdScan(const std::string& plane, double xMin, double xMax, double yMin,
            double yMax, int xSteps, int ySteps, const std::string& variant,
            const std::string& outPath, const std::string& bitmapPath) {
    if (xSteps < 2 || ySteps < 2 || !(xMin < xMax) || !(yMin < yMax))
        throw DomainError("invalid scan grid");
    if (variant != "raw" && variant != "effective")
        throw DomainError("variant must be 'raw' or 'effective'");
    if (plane != "KL" && plane != "gamma")
        throw DomainError("plane must be 'KL' or 'gamma'");

    std::ofstream file;
    std::ostream& out = openOut(outPath, file);
    out << "# type=scan\n"
        << "# plane=" << plane << "\n"
        << "# variant=" << variant << "\n"
        << "x,y,phiStarRaw,phiStarEff,kind\n";

    std::vector<std::vector<int>> image(ySteps, std::vector<int>(xSteps, 0));
    for (int j = 0; j < ySteps; ++j) {
        double y = yMin + (yMax - yMin) * j / (ySteps - 1);
        for (int i = 0; i < xSteps; ++i) {
            double x = xMin + (xMax - xMin) * i / (xSteps - 1);
            double raw = std::nan(""), eff = std::nan("");
            std::string kind = "multicritical";
            try {
                double K, gamma2, gamma3;
                if (plane == "KL") {
                    K = x;
                    gamma2 = std::sqrt(2.0 / 3.0 * y * y * y);
                    gamma3 = -3.0 * K * K;
                } else {
                    gamma2 = x;
                    gamma3 = y;
                    K = std::sqrt(std::abs(gamma3) / 3.0);
                }
                TransitionReport rep = classify({0.0, gamma2, gamma3});
                raw = rep.phiStarRaw;
                eff = rep.phiStarEff;
                kind = toString(rep.kind);
            } catch (const MulticriticalError&) {
            }
            out << fmt(x) << ',' << fmt(y) << ',' << fmt(raw) << ',' << fmt(eff)
                << ',' << kind << "\n";
            double phi = variant == "raw" ? raw : eff;
            image[j][i] = std::isfinite(phi) && phi > 0.0 ? 1 : 0;
        }
    }

    if (!bitmapPath.empty()) {
        std::ofstream bm(bitmapPath);
        if (!bm) throw DomainError("cannot open bitmap file: " + bitmapPath);
        bm << "P1\n" << xSteps << ' ' << ySteps << "\n";
        for (int j = ySteps - 1; j >= 0; --j) {  // top row = yMax
            for (int i = 0; i < xSteps; ++i)
                bm << image[j][i] << (i + 1 == xSteps ? '\n' : ' ');
        }
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int cmdVerify(const std::string& path, std::uint64_t seed, int starts,
              int sweepPoints) {
    auto records = readCoefficientRecords(readFile(path));
    if (records.empty()) throw DomainError("no coefficient records in " + path);
    for (const auto& rc : records) {
        ReducedPotential rp0 = reduce(toDoubleCoefficients(rc));
        TransitionReport rep = classify(rp0);
        Derived d = derived(rp0);
        std::cout << "# gamma2=" << fmtShort(rp0.gamma2)
                  << " gamma3=" << fmtShort(rp0.gamma3)
                  << " lambda0=" << fmtShort(rep.lambda0) << "\n";
        for (int i = 0; i < sweepPoints; ++i) {
            double lambda =
                sweepPoints == 1
                    ? rp0.lambda
                    : rep.lambda0 - 1.0 + 2.0 * i / (sweepPoints - 1);
            ReducedPotential rp{lambda, rp0.gamma2, rp0.gamma3};
            double mu = d.muOf(lambda);

            MinimizationConfig cfg;
            cfg.seed = seed;
            cfg.starts = starts;
            std::vector<StateVector> extra;
            double qMax = 0.0;
            for (int alpha : {+1, -1}) {
                BranchState s = branchState({alpha, d.sigma}, rp, mu);
                if (s.exists && s.physical) {
                    extra.push_back(diagonalState(s.t2, s.t3));
                    qMax = std::max(qMax, s.q);
                }
            }
            cfg.radius = std::max(2.0, 3.0 * qMax);

            MinimaReport mins =
                minimizeFull(simplifiedAsCoefficients(rp), cfg, extra);
            AgreementReport ar = compare(rp, mu, mins);
            std::cout << "lambda=" << fmtShort(lambda)
                      << " oracle=(T2=" << fmtShort(ar.oracleT2)
                      << ", T3=" << fmtShort(ar.oracleT3)
                      << ", phi=" << fmtShort(ar.oraclePhi) << ")"
                      << (ar.coexistence ? " coexistence" : "") << " agree\n";
        }
    }
    std::cout << "verify: all lambda points agree\n";
    return 0;
}

// ----------------------------------------------------------------- check

std::vector<std::string> splitCsv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

int cmdCheck(const std::string& path) {
    std::istringstream in(readFile(path));
    std::string line;
    std::map<std::string, std::string> meta;
    std::string header;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto eq = line.find('=');
            if (eq != std::string::npos)
                meta[line.substr(2, eq - 2)] = line.substr(eq + 1);
            continue;
        }
        if (header.empty())
            header = line;
        else
            rows.push_back(splitCsv(line));
    }
    if (!meta.count("type")) throw DomainError("missing '# type=' metadata");
    const std::string type = meta["type"];
    int bad = 0;

    if (type == "branches") {
        double K = std::stod(meta.at("K"));
        double gamma2 = std::stod(meta.at("gamma2"));
        AdmissibilityMode mode = parseMode(meta.at("admissibility"));
        for (const auto& r : rows) {
            if (r.size() != 12) throw DomainError("bad branches row");
            double mu = std::stod(r[0]);
            int alpha = std::stoi(r[1]), sigma = std::stoi(r[2]);
            BranchState s = branchState({alpha, sigma}, K, gamma2, mu, mode);
            auto near = [](double a, double b) {
                if (std::isnan(a) && std::isnan(b)) return true;
                return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
            };
            bool ok = near(std::stod(r[3]), s.t2) && near(std::stod(r[4]), s.t3) &&
                      near(std::stod(r[5]), s.q) && near(std::stod(r[6]), s.omega) &&
                      near(std::stod(r[7]), s.zeta2) && near(std::stod(r[8]), s.phi) &&
                      std::stoi(r[9]) == (s.exists ? 1 : 0) &&
                      std::stoi(r[10]) == (s.physical ? 1 : 0) &&
                      std::stoi(r[11]) == (s.omegaAdmissible ? 1 : 0);
            if (ok && s.exists) {
                // Stationarity of the recorded point in orbit space.
                double gamma3 = 3.0 * sigma * K * K;
                ReducedPotential rp{3.0 * K * K * K * K * mu, gamma2, gamma3};
                auto [g2, g3] = orbitGradient(rp, s.t2, s.t3);
                double scale = std::max(1.0, s.t2 * s.t2);
                ok = std::abs(g2) <= 1e-8 * scale && std::abs(g3) <= 1e-8 * scale;
            }
            if (!ok) {
                std::cerr << "check: branches row failed: " << r[0] << ','
                          << r[1] << ',' << r[2] << "\n";
                ++bad;
            }
        }
    } else if (type == "scan") {
        const std::string plane = meta.at("plane");
        for (const auto& r : rows) {
            if (r.size() != 5) throw DomainError("bad scan row");
            double x = std::stod(r[0]), y = std::stod(r[1]);
            double raw = std::stod(r[2]), eff = std::stod(r[3]);
            double eRaw, eEff;
            std::string kind;
            try {
                double gamma2, gamma3;
                if (plane == "KL") {
                    gamma2 = std::sqrt(2.0 / 3.0 * y * y * y);
                    gamma3 = -3.0 * x * x;
                } else {
                    gamma2 = x;
                    gamma3 = y;
                }
                TransitionReport rep = classify({0.0, gamma2, gamma3});
                eRaw = rep.phiStarRaw;
                eEff = rep.phiStarEff;
                kind = toString(rep.kind);
            } catch (const MulticriticalError&) {
                eRaw = eEff = std::nan("");
                kind = "multicritical";
            }
            auto near = [](double a, double b) {
                if (std::isnan(a) && std::isnan(b)) return true;
                return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
            };
            if (!near(raw, eRaw) || !near(eff, eEff) || kind != r[4]) {
                std::cerr << "check: scan row failed: " << r[0] << ',' << r[1]
                          << "\n";
                ++bad;
            }
        }
    } else {
        throw DomainError("unknown csv type: " + type);
    }
    if (bad) {
        std::cerr << "check: " << bad << " row(s) failed\n";
        return 4;
    }
    std::cout << "check: " << rows.size() << " row(s) verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-6 rotationally invariant potential toolkit"};
    app.require_subcommand(1);

    // reduce
    std::string reduceFile;
    bool rational = false;
    auto* sub = app.add_subcommand(
        "reduce", "normalize a potential to the 3-parameter simplified form");
    sub->add_option("file", reduceFile, "coefficient file (c1..c6 per line)")
        ->required();
    sub->add_flag("--rational", rational, "print exact fractions");

    // branches
    double gamma2 = 0.0, gamma3 = -3.0, muMin = -1.0, muMax = 3.0;
    int steps = 101;
    std::string admissibility = "paper", outPath;
    auto* br = app.add_subcommand("branches", "sweep branch states over mu");
    br->add_option("--gamma2", gamma2)->required();
    br->add_option("--gamma3", gamma3)->required();
    br->add_option("--mu-min", muMin);
    br->add_option("--mu-max", muMax);
    br->add_option("--steps", steps)->check(CLI::Range(2, 1000000));
    br->add_option("--admissibility", admissibility);
    br->add_option("--out", outPath);

    // classify
    std::string classifyFile;
    double cg2 = 0.0, cg3 = 0.0;
    bool hasG2 = false, hasG3 = false;
    auto* cl = app.add_subcommand("classify", "phase-transition classification");
    cl->add_option("file", classifyFile, "coefficient file");
    cl->add_option("--gamma2", cg2)->each([&](const std::string&) { hasG2 = true; });
    cl->add_option("--gamma3", cg3)->each([&](const std::string&) { hasG3 = true; });
    cl->add_option("--admissibility", admissibility);

    // scan
    std::string plane = "KL", variant = "raw", bitmapPath;
    double xMin = 0.02, xMax = 2.0, yMin = 0.02, yMax = 2.0;
    int xSteps = 100, ySteps = 100;
    auto* sc = app.add_subcommand("scan", "parameter-plane scan of phiStar");
    sc->add_option("--plane", plane, "KL or gamma");
    sc->add_option("--x-min", xMin);
    sc->add_option("--x-max", xMax);
    sc->add_option("--y-min", yMin);
    sc->add_option("--y-max", yMax);
    sc->add_option("--x-steps", xSteps);
    sc->add_option("--y-steps", ySteps);
    sc->add_option("--variant", variant, "raw or effective (bitmap)");
    sc->add_option("--out", outPath);
    sc->add_option("--bitmap", bitmapPath, "P1 bitmap of phiStar > 0 cells");

    // verify
    std::string verifyFile;
    std::uint64_t seed = 42;
    int starts = 200, sweepPoints = 11;
    auto* vf = app.add_subcommand("verify",
                                  "analytic vs brute-force minimization");
    vf->add_option("file", verifyFile)->required();
    vf->add_option("--seed", seed);
    vf->add_option("--starts", starts);
    vf->add_option("--sweep", sweepPoints)->check(CLI::Range(1, 1000));

    // check
    std::string checkFile;
    auto* ck = app.add_subcommand("check", "re-verify an emitted CSV");
    ck->add_option("file", checkFile)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub->parsed()) return cmdReduce(reduceFile, rational);
        if (br->parsed())
            return cmdBranches(gamma2, gamma3, muMin, muMax, steps,
                               parseMode(admissibility), outPath);
        if (cl->parsed())
            return cmdClassify(classifyFile,
                               hasG2 ? std::optional<double>(cg2) : std::nullopt,
                               hasG3 ? std::optional<double>(cg3) : std::nullopt,
                               parseMode(admissibility));
        if (sc->parsed())
            return cmdScan(plane, xMin, xMax, yMin, yMax, xSteps, ySteps,
                           variant, outPath, bitmapPath);
        if (vf->parsed()) return cmdVerify(verifyFile, seed, starts, sweepPoints);
        if (ck->parsed()) return cmdCheck(checkFile);
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 2;
    } catch (const MulticriticalError& e) {
        std::cerr << "multicritical: " << e.what() << "\n";
        return 3;
    } catch (const OutsidePerturbativeRegime& e) {
        std::cerr << "outside perturbative regime: " << e.what() << "\n";
        return 3;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
