#include <doctest.h>

#include <random>

#include "ldg/poly.hpp"
#include "test_util.hpp"

using namespace ldg;
using namespace ldg::testutil;

namespace {

SparsePoly randomPoly(std::mt19937_64& rng, int maxTerms = 6, int maxDeg = 3) {
    std::uniform_int_distribution<int> nterms(1, maxTerms);
    std::uniform_int_distribution<int> expo(0, maxDeg);
    SparsePoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m{};
        int budget = maxDeg;
        for (int i = 0; i < 5; ++i) {
            int e = std::min(expo(rng), budget);
            m[i] = static_cast<std::uint16_t>(e);
            budget -= e;
        }
        p.addTerm(m, randomRational(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    auto x = polyVariables();
    std::mt19937_64 rng(1);
    SparsePoly p = randomPoly(rng);
    CHECK(p + SparsePoly::zero() == p);
    CHECK(x[0] * x[0] == SparsePoly::monomial({2, 0, 0, 0, 0}, 1));

    CHECK(polyT2().termCount() == 6);
    CHECK(polyT3().termCount() == 7);
    CHECK(polyT2().degree() == 2);
    CHECK(polyT3().degree() == 3);
}

TEST_CASE("ring axioms hold exactly on random inputs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        SparsePoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == SparsePoly::zero());
    }
}

TEST_CASE("substitute") {
    std::mt19937_64 rng(9);
    auto identity = polyVariables();

    SparsePoly p = randomPoly(rng);
    CHECK(p.substitute(identity) == p);

    // x1^2 at x1 -> x1 + x2^2: binomial expansion.
    auto s = identity;
    s[0] = identity[0] + identity[1] * identity[1];
    SparsePoly q = SparsePoly::monomial({2, 0, 0, 0, 0}, 1).substitute(s);
    SparsePoly expect = SparsePoly::monomial({2, 0, 0, 0, 0}, 1) +
                        SparsePoly::monomial({1, 2, 0, 0, 0}, 2) +
                        SparsePoly::monomial({0, 4, 0, 0, 0}, 1);
    CHECK(q == expect);

    // z = x + k2 T2 x: the degree <= 4 slice of T2(z) is T2 + 2 k2 T2^2.
    Rational k2(3, 7);
    SparsePoly t2 = polyT2();
    std::array<SparsePoly, 5> z;
    for (int i = 0; i < 5; ++i)
        z[i] = identity[i] + t2.mulTruncated(identity[i], 24).scale(k2);
    SparsePoly t2z = t2.substitute(z);
    CHECK(t2z.truncate(4) == t2 + (t2 * t2).scale(2 * k2));
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(13);
    auto s = polyVariables();
    s[0] = s[0] + s[1] * s[2];
    s[3] = s[3] + polyT2().scale(Rational(1, 2));
    for (int t = 0; t < 10; ++t) {
        SparsePoly a = randomPoly(rng, 4, 2), b = randomPoly(rng, 4, 2);
        CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
        CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
    }
}

TEST_CASE("truncate") {
    SparsePoly p = SparsePoly::monomial({7, 0, 0, 0, 0}, 1) +
                   SparsePoly::monomial({2, 0, 0, 0, 0}, 1);
    CHECK(p.truncate(6) == SparsePoly::monomial({2, 0, 0, 0, 0}, 1));

    std::mt19937_64 rng(17);
    SparsePoly q = randomPoly(rng);
    CHECK(q.truncate(24) == q);
}

TEST_CASE("decomposeInvariant") {
    auto basis = invariantBasis();
    auto a = decomposeInvariant(basis[2]);  // T2^2
    CHECK(a == std::array<Rational, 6>{0, 0, 1, 0, 0, 0});

    CHECK_THROWS_AS(decomposeInvariant(SparsePoly::monomial({2, 0, 0, 0, 0}, 1)),
                    DecompositionError);

    // Random exact combinations come back exactly.
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        std::array<Rational, 6> coeff;
        SparsePoly p;
        for (int i = 0; i < 6; ++i) {
            coeff[i] = randomRational(rng);
            p = p + basis[i].scale(coeff[i]);
        }
        CHECK(decomposeInvariant(p) == coeff);
    }

    // The residual of a failed decomposition is reported.
    try {
        decomposeInvariant(basis[0] + SparsePoly::monomial({1, 0, 0, 0, 0}, 1));
        CHECK(false);
    } catch (const DecompositionError& e) {
        CHECK(SparsePoly::fromText(e.residual) ==
              SparsePoly::monomial({1, 0, 0, 0, 0}, 1));
    }
}

TEST_CASE("canonical serialization round trip") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        SparsePoly p = randomPoly(rng);
        CHECK(SparsePoly::fromText(p.toText()) == p);
    }
    // Graded-lex order is deterministic: golden value for T2.
    CHECK(polyT2().toText() ==
          "1 0 0 0 0 2\n1 0 0 0 2 0\n1 0 0 2 0 0\n1 0 2 0 0 0\n"
          "1 1 0 0 1 0\n1 2 0 0 0 0\n");
}

TEST_CASE("degree cap is enforced") {
    Monomial tooBig{};
    tooBig[0] = 25;
    CHECK_THROWS_AS(SparsePoly::monomial(tooBig, 1), DomainError);
}
