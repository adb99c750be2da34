#include "ldg/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace ldg {

using boost::multiprecision::cpp_int;

int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

Rational parseRational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            cpp_int num(s.substr(0, slash));
            cpp_int den(s.substr(slash + 1));
            if (den == 0) throw DomainError("zero denominator in '" + text + "'");
            return Rational(num, den);
        } catch (const std::exception&) {
            throw DomainError("malformed rational '" + text + "'");
        }
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw DomainError("malformed rational '" + text + "'");
        try {
            cpp_int num(digits);
            cpp_int den = 1;
            for (std::size_t i = 0; i < frac; ++i) den *= 10;
            return Rational(num, den);
        } catch (const std::exception&) {
            throw DomainError("malformed rational '" + text + "'");
        }
    }

    try {
        return Rational(cpp_int(s));
    } catch (const std::exception&) {
        throw DomainError("malformed rational '" + text + "'");
    }
}

std::string formatRational(const Rational& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

void QuadExt::checkCompatible(const QuadExt& o) const {
    if (d_ != o.d_)
        throw DomainError("mixing quadratic extensions with different radicands");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    checkCompatible(o);
    return QuadExt(a_ + o.a_, b_ + o.b_, d_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    checkCompatible(o);
    return QuadExt(a_ - o.a_, b_ - o.b_, d_);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    checkCompatible(o);
    return QuadExt(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    checkCompatible(o);
    Rational n = o.a_ * o.a_ - o.b_ * o.b_ * d_;
    if (n == 0) throw DomainError("division by zero in quadratic extension");
    QuadExt conj(o.a_, -o.b_, d_);
    QuadExt num = *this * conj;
    return QuadExt(num.a_ / n, num.b_ / n, d_);
}

bool QuadExt::equalsRational(const Rational& r) const {
    if (b_ == 0) return a_ == r;
    // a + b sqrt(d) = r requires sqrt(d) = (r - a)/b rational.
    Rational s = (r - a_) / b_;
    return s >= 0 && s * s == d_;
}

double QuadExt::toDouble() const {
    return ldg::toDouble(a_) + ldg::toDouble(b_) * std::sqrt(ldg::toDouble(d_));
}

}  // namespace ldg
