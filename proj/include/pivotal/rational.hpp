#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pivotal {

/// Arbitrary-precision rational scalar. GMP keeps values in canonical form
/// (positive denominator, reduced), so arithmetic is exact and comparison is
/// total order.
using Rational = boost::multiprecision::mpq_rational;
using BigInt   = boost::multiprecision::mpz_int;

/// Coordinate vector over Rational. std::vector gives us lexicographic
/// ordering for free, which we use as the canonical order on points.
using QVec = std::vector<Rational>;

class DimensionMismatch : public std::runtime_error {
  public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch")
        : std::runtime_error(what) {}
};

inline void checkDim(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector dimensions " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

inline Rational dot(const QVec& a, const QVec& b) {
    checkDim(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec add(const QVec& a, const QVec& b) {
    checkDim(a, b);
    QVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    checkDim(a, b);
    QVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

inline QVec scaled(const QVec& a, const Rational& s) {
    QVec r(a);
    for (auto& x : r) x *= s;
    return r;
}

inline QVec negated(const QVec& a) { return scaled(a, Rational(-1)); }

inline void addInPlace(QVec& a, const QVec& b) {
    checkDim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

inline bool isZero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline QVec zeroVec(std::size_t dim) { return QVec(dim, Rational(0)); }

inline QVec unitVec(std::size_t dim, std::size_t i, const Rational& s = 1) {
    QVec r(dim, Rational(0));
    r[i] = s;
    return r;
}

/// Scale a nonzero vector so that entries are coprime integers and the first
/// nonzero entry is positive. Two vectors span the same oriented ray iff they
/// canonicalize to the same value; a line, iff they agree up to global sign.
QVec canonicalRay(const QVec& v);

/// canonicalRay with the sign dropped (first nonzero entry forced positive).
QVec canonicalLine(const QVec& v);

/// Parse "p/q", "p" or an integer token. Throws std::invalid_argument on junk.
Rational parseRational(const std::string& s);

/// Serialize losslessly: integers bare, otherwise "p/q".
std::string rationalToString(const Rational& r);

std::string vecToString(const QVec& v);

}  // namespace pivotal
