#include "pivotal/rational.hpp"

#include <sstream>

namespace pivotal {

QVec canonicalRay(const QVec& v) {
    BigInt den = 1;
    for (const auto& x : v) den = lcm(den, BigInt(denominator(x)));
    BigInt g = 0;
    QVec r(v.size());
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = BigInt(numerator(v[i])) * (den / BigInt(denominator(v[i])));
        g       = gcd(g, ints[i]);
    }
    if (g == 0) return zeroVec(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
    return r;
}

QVec canonicalLine(const QVec& v) {
    QVec r = canonicalRay(v);
    for (const auto& x : r) {
        if (x > 0) return r;
        if (x < 0) return negated(r);
    }
    return r;
}

Rational parseRational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string rationalToString(const Rational& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

std::string vecToString(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rationalToString(v[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace pivotal
