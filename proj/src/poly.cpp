#include "ldg/poly.hpp"

#include <sstream>
#include <vector>

namespace ldg {

SparsePoly SparsePoly::constant(const Rational& c) {
    SparsePoly p;
    p.addTerm({0, 0, 0, 0, 0}, c);
    return p;
}

SparsePoly SparsePoly::variable(int i) {
    if (i < 0 || i >= 5) throw DomainError("variable index out of range");
    Monomial m{};
    m[i] = 1;
    return monomial(m, 1);
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Rational& c) {
    SparsePoly p;
    p.addTerm(m, c);
    return p;
}

void SparsePoly::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (monomialDegree(m) > kDegreeCap)
        throw DomainError("term exceeds the degree cap");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SparsePoly::degree() const {
    if (terms_.empty()) return -1;
    return monomialDegree(terms_.rbegin()->first);  // graded order
}

Rational SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    return mulTruncated(o, kDegreeCap);
}

SparsePoly SparsePoly::scale(const Rational& c) const {
    SparsePoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SparsePoly SparsePoly::mulTruncated(const SparsePoly& o, int maxDeg) const {
    SparsePoly r;
    for (const auto& [ma, ca] : terms_) {
        int da = monomialDegree(ma);
        if (da > maxDeg) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (da + monomialDegree(mb) > maxDeg) continue;
            Monomial m;
            for (int i = 0; i < 5; ++i)
                m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            r.addTerm(m, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::pow(int n, int maxDeg) const {
    if (n < 0) throw DomainError("negative power");
    SparsePoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r.mulTruncated(*this, maxDeg);
    return r;
}

SparsePoly SparsePoly::substitute(const std::array<SparsePoly, 5>& s,
                                  int maxDeg) const {
    // Cache powers of each substituted variable.
    std::array<std::vector<SparsePoly>, 5> powers;
    for (int i = 0; i < 5; ++i) powers[i].push_back(constant(1));
    auto power = [&](int i, int e) -> const SparsePoly& {
        while (static_cast<int>(powers[i].size()) <= e)
            powers[i].push_back(powers[i].back().mulTruncated(s[i], maxDeg));
        return powers[i][e];
    };

    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        SparsePoly t = constant(c);
        for (int i = 0; i < 5; ++i)
            if (m[i] > 0) t = t.mulTruncated(power(i, m[i]), maxDeg);
        r = r + t;
    }
    return r;
}

SparsePoly SparsePoly::truncate(int maxDeg) const {
    if (maxDeg < 0) throw DomainError("negative truncation degree");
    return slice(0, maxDeg);
}

SparsePoly SparsePoly::slice(int lo, int hi) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        int d = monomialDegree(m);
        if (d >= lo && d <= hi) r.terms_.emplace(m, c);
    }
    return r;
}

std::string SparsePoly::toText() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        os << formatRational(c);
        for (int i = 0; i < 5; ++i) os << ' ' << m[i];
        os << '\n';
    }
    return os.str();
}

SparsePoly SparsePoly::fromText(const std::string& text) {
    SparsePoly p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string coeff;
        ls >> coeff;
        Monomial m{};
        for (int i = 0; i < 5; ++i) {
            int e;
            if (!(ls >> e) || e < 0)
                throw DomainError("malformed polynomial term '" + line + "'");
            m[i] = static_cast<std::uint16_t>(e);
        }
        p.addTerm(m, parseRational(coeff));
    }
    return p;
}

std::array<SparsePoly, 5> polyVariables() {
    return {SparsePoly::variable(0), SparsePoly::variable(1),
            SparsePoly::variable(2), SparsePoly::variable(3),
            SparsePoly::variable(4)};
}

SparsePoly polyT2() {
    auto x = polyVariables();
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] +
           x[4] * x[4] + x[0] * x[3];
}

SparsePoly polyT3() {
    auto x = polyVariables();
    return x[0] * (x[1] * x[1] - x[3] * x[3] - x[4] * x[4]) -
           x[3] * (x[0] * x[0] - x[1] * x[1] + x[2] * x[2]) +
           (x[1] * x[2] * x[4]).scale(2);
}

std::array<SparsePoly, 5> polyF2() {
    auto x = polyVariables();
    std::array<SparsePoly, 5> f;
    f[0] = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] -
           (x[0] * x[3] + x[3] * x[3] + x[4] * x[4]).scale(2);
    f[1] = (x[0] * x[1] + x[1] * x[3] + x[2] * x[4]).scale(3);
    f[2] = (x[1] * x[4] - x[2] * x[3]).scale(3);
    f[3] = x[1] * x[1] + x[3] * x[3] + x[4] * x[4] -
           (x[0] * x[0] + x[2] * x[2] + x[0] * x[3]).scale(2);
    f[4] = (x[1] * x[2] - x[0] * x[4]).scale(3);
    return f;
}

std::array<SparsePoly, 6> invariantBasis() {
    SparsePoly t2 = polyT2(), t3 = polyT3();
    return {t2, t3, t2 * t2, t2 * t3, t2 * t2 * t2, t3 * t3};
}

std::array<Rational, 6> decomposeInvariant(const SparsePoly& p) {
    auto basis = invariantBasis();

    // Homogeneous components do not mix: solve degree by degree with
    // exact Gaussian elimination on the monomial coefficient system.
    std::array<Rational, 6> a{};
    SparsePoly reconstruction;
    // basis index -> total degree
    const int basisDeg[6] = {2, 3, 4, 5, 6, 6};

    for (int deg = 2; deg <= 6; ++deg) {
        std::vector<int> cols;
        for (int j = 0; j < 6; ++j)
            if (basisDeg[j] == deg) cols.push_back(j);

        SparsePoly target = p.slice(deg, deg);
        if (target.isZero() && cols.empty()) continue;

        // Collect equations over the union of monomials.
        std::map<Monomial, std::vector<Rational>, GradedLex> rows;
        auto rowFor = [&](const Monomial& m) -> std::vector<Rational>& {
            auto it = rows.find(m);
            if (it == rows.end())
                it = rows.emplace(m, std::vector<Rational>(cols.size() + 1, 0))
                         .first;
            return it->second;
        };
        for (std::size_t jc = 0; jc < cols.size(); ++jc)
            for (const auto& [m, c] : basis[cols[jc]].terms())
                rowFor(m)[jc] = c;
        for (const auto& [m, c] : target.terms()) rowFor(m)[cols.size()] = c;

        // Elimination.
        std::vector<std::vector<Rational>> mat;
        mat.reserve(rows.size());
        for (auto& [m, r] : rows) mat.push_back(r);
        std::size_t nr = mat.size(), nc = cols.size();
        std::vector<std::size_t> pivotRow(nc, SIZE_MAX);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < nc && rank < nr; ++col) {
            std::size_t pr = SIZE_MAX;
            for (std::size_t r = rank; r < nr; ++r)
                if (mat[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr == SIZE_MAX) continue;
            std::swap(mat[rank], mat[pr]);
            for (std::size_t r = 0; r < nr; ++r) {
                if (r == rank || mat[r][col] == 0) continue;
                Rational f = mat[r][col] / mat[rank][col];
                for (std::size_t cix = col; cix <= nc; ++cix)
                    mat[r][cix] -= f * mat[rank][cix];
            }
            pivotRow[col] = rank;
            ++rank;
        }
        for (std::size_t col = 0; col < nc; ++col) {
            if (pivotRow[col] == SIZE_MAX) continue;  // residual check below
            auto& row = mat[pivotRow[col]];
            a[cols[col]] = row[nc] / row[col];
        }
    }

    for (int j = 0; j < 6; ++j) reconstruction = reconstruction + basis[j].scale(a[j]);
    SparsePoly residual = p - reconstruction;
    if (!residual.isZero())
        throw DecompositionError("polynomial is not in the invariant span",
                                 residual.toText());
    return a;
}

}  // namespace ldg
