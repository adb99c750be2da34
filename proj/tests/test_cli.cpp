// End-to-end tests driving the installed command-line binary; the
// binary path arrives as the last command-line argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct RunResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    auto outP = g_tmp / "stdout.txt";
    auto errP = g_tmp / "stderr.txt";
    std::string cmd = "'" + g_cli + "' " + args + " > '" + outP.string() +
                      "' 2> '" + errP.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outP);
    r.err = slurp(errP);
    return r;
}

std::filesystem::path writeFile(const std::string& name,
                                const std::string& content) {
    auto p = g_tmp / name;
    std::ofstream(p) << content;
    return p;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<std::vector<std::string>> csvRows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool seenHeader = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seenHeader) {
            seenHeader = true;
            continue;
        }
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) row.push_back(f);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("reduce") {
    auto p = writeFile("ok.csv", "# demo\n0,1,1,2,1,0\n");
    RunResult r = run("reduce '" + p.string() + "'");
    CHECK(r.exitCode == 0);
    CHECK(contains(r.out, "gamma2  = 1"));
    CHECK(contains(r.out, "gamma3  = 1"));
    CHECK(contains(r.out, "-0.66666666666666"));
    CHECK(contains(r.out, "certified: exact"));

    RunResult rr = run("reduce --rational '" + p.string() + "'");
    CHECK(rr.exitCode == 0);
    CHECK(contains(rr.out, "-2/3"));
    CHECK(contains(rr.out, "1/3"));
    CHECK(contains(rr.out, "4/3"));

    auto bad = writeFile("deg.csv", "0,0,1,1,1,1\n");
    CHECK(run("reduce '" + bad.string() + "'").exitCode == 2);

    auto corrupt = writeFile("corrupt.csv", "0,1,oops,2,1,0\n");
    CHECK(run("reduce '" + corrupt.string() + "'").exitCode == 1);

    CHECK(run("reduce '" + (g_tmp / "missing.csv").string() + "'").exitCode == 1);
}

TEST_CASE("branches sweep and check round trip") {
    auto out = g_tmp / "branches.csv";
    RunResult r = run(
        "branches --gamma2 0.5 --gamma3 -3 --mu-min -1 --mu-max 3 --steps 41 "
        "--out '" +
        out.string() + "'");
    REQUIRE(r.exitCode == 0);
    std::string text = slurp(out);
    CHECK(contains(text, "# type=branches"));
    CHECK(contains(
        text, "mu,alpha,sigma,T2,T3,q,omega,zeta2,phi,exists,physical,admissible"));

    // S_(+-) runs from T2 = 1 at mu = -1 to T2 = 3 at mu = 3.
    auto rows = csvRows(text);
    REQUIRE(rows.size() == 41 * 4);
    double t2First = -1, t2Last = -1;
    for (const auto& row : rows) {
        if (row[1] == "1" && row[2] == "-1") {
            if (t2First < 0) t2First = std::stod(row[3]);
            t2Last = std::stod(row[3]);
        }
    }
    CHECK(t2First == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(t2Last == doctest::Approx(3.0).epsilon(1e-10));

    CHECK(run("check '" + out.string() + "'").exitCode == 0);

    // Tampered rows are rejected.
    std::string broken = text;
    auto pos = broken.rfind("\n", broken.size() - 2);
    std::string lastLine = broken.substr(pos + 1);
    auto c1 = lastLine.find(',');
    auto c2 = lastLine.find(',', c1 + 1);
    auto c3 = lastLine.find(',', c2 + 1);
    auto c4 = lastLine.find(',', c3 + 1);
    lastLine = lastLine.substr(0, c3 + 1) + "99" + lastLine.substr(c4);
    auto tam = writeFile("tampered.csv", broken.substr(0, pos + 1) + lastLine);
    CHECK(run("check '" + tam.string() + "'").exitCode == 4);

    CHECK(run("branches --gamma2 0.5 --gamma3 0").exitCode == 3);
}

TEST_CASE("classify") {
    RunResult r = run("classify --gamma2 0.5 --gamma3 -3");
    CHECK(r.exitCode == 0);
    CHECK(contains(r.out, "first-order-direct-biaxial"));
    CHECK(contains(r.out, "no second-order biaxial branching at lambda=0"));
    CHECK(contains(r.out, "\"secondOrderExcluded\": true"));

    RunResult r2 = run("classify --gamma2 1.5 --gamma3 -3");
    CHECK(contains(r2.out, "first-order-uniaxial-onset"));

    auto p = writeFile("cls.csv", "-0.1,1,1,0,1,1\n");
    CHECK(run("classify '" + p.string() + "'").exitCode == 0);
    CHECK(run("classify").exitCode == 1);
}

TEST_CASE("scan spots, bitmap and check round trip") {
    auto out = g_tmp / "scan.csv";
    auto pbm = g_tmp / "scan.pbm";
    RunResult r = run(
        "scan --plane KL --x-min 1 --x-max 2 --x-steps 2 "
        "--y-min 0.5 --y-max 1.5 --y-steps 11 --variant raw --out '" +
        out.string() + "' --bitmap '" + pbm.string() + "'");
    REQUIRE(r.exitCode == 0);
    std::string text = slurp(out);
    CHECK(contains(text, "x,y,phiStarRaw,phiStarEff,kind"));

    bool saw05 = false, saw08 = false, saw15 = false;
    for (const auto& row : csvRows(text)) {
        double x = std::stod(row[0]), y = std::stod(row[1]);
        if (std::abs(x - 1.0) > 1e-9) continue;
        double raw = std::stod(row[2]), eff = std::stod(row[3]);
        if (std::abs(y - 0.5) < 1e-9) {
            saw05 = true;
            CHECK(raw == doctest::Approx(-0.020833).epsilon(1e-4));
        } else if (std::abs(y - 0.8) < 1e-9) {
            saw08 = true;
            CHECK(raw > 0.0);
            CHECK(eff > 0.0);
            CHECK(raw == doctest::Approx(0.778667).epsilon(1e-4));
            CHECK(eff == doctest::Approx(0.914667).epsilon(1e-4));
        } else if (std::abs(y - 1.5) < 1e-9) {
            saw15 = true;
            CHECK(raw == doctest::Approx(-0.5625).epsilon(1e-6));
            CHECK(eff < 0.0);
        }
    }
    CHECK(saw05);
    CHECK(saw08);
    CHECK(saw15);

    std::string bitmap = slurp(pbm);
    CHECK(bitmap.rfind("P1\n", 0) == 0);
    CHECK(contains(bitmap, "1"));  // nonempty positive region

    CHECK(run("check '" + out.string() + "'").exitCode == 0);

    CHECK(run("scan --x-min 2 --x-max 1").exitCode == 1);
}

TEST_CASE("verify") {
    auto p = writeFile("verify.csv", "-1,0.5,-3,0,1,1\n");
    RunResult r = run("verify --seed 42 --starts 60 --sweep 3 '" + p.string() +
                      "'");
    CHECK(r.exitCode == 0);
    CHECK(contains(r.out, "verify: all lambda points agree"));

    auto bad = writeFile("verify_bad.csv", "1,2,3\n");
    CHECK(run("verify '" + bad.string() + "'").exitCode == 1);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <cli-binary>\n");
        return 1;
    }
    g_cli = argv[argc - 1];
    g_tmp = std::filesystem::temp_directory_path() / "ldg-cli-test";
    std::filesystem::create_directories(g_tmp);
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
