#ifndef BIDIAG_RATIONAL_HPP
#define BIDIAG_RATIONAL_HPP

// Exact scalar type for the reference oracle: arbitrary-precision rationals
// kept in lowest terms by the backing library. Every finite double converts
// exactly (doubles are dyadic rationals), so floating data can be lifted
// into exact arithmetic without any rounding question.
//
// RationalInterval is a closed interval with exact rational endpoints. It is
// the device used for sign decisions about irrational quantities (entries of
// matrix exponentials): compute a rigorous enclosure, then only certify a
// sign when the enclosure excludes zero.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

using ExactScalar = boost::multiprecision::cpp_rational;
using ExactInt = boost::multiprecision::cpp_int;
using ExactMatrix = Matrix<ExactScalar>;

inline ExactScalar to_exact(double x) {
    if (!std::isfinite(x)) throw std::domain_error("to_exact: non-finite double");
    return ExactScalar(x);
}

inline double to_double(const ExactScalar& q) { return q.convert_to<double>(); }

inline std::vector<ExactScalar> to_exact(const std::vector<double>& v) {
    std::vector<ExactScalar> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_exact(v[i]);
    return r;
}

inline std::vector<double> to_double(const std::vector<ExactScalar>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}

inline ExactMatrix to_exact(const Matrix<double>& m) {
    ExactMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_exact(m(i, j));
    return r;
}

inline Matrix<double> to_double(const ExactMatrix& m) {
    Matrix<double> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
    return r;
}

inline std::string to_fraction_string(const ExactScalar& q) {
    ExactInt num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
    // b > 0 assumed; round toward minus infinity
    ExactInt q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

} // namespace detail

// Round down/up to a multiple of 2^-bits (outward rounding helpers).
inline ExactScalar dyadic_floor(const ExactScalar& q, unsigned bits) {
    ExactInt scale = ExactInt(1) << bits;
    ExactInt k = detail::floor_div(numerator(q) * scale, denominator(q));
    return ExactScalar(k, scale);
}

inline ExactScalar dyadic_ceil(const ExactScalar& q, unsigned bits) {
    return -dyadic_floor(-q, bits);
}

struct RationalInterval {
    ExactScalar lo, hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(int v) : lo(v), hi(v) {}
    explicit RationalInterval(const ExactScalar& v) : lo(v), hi(v) {}
    RationalInterval(ExactScalar l, ExactScalar h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval: lo > hi");
    }

    bool exact() const { return lo == hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return RationalInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return RationalInterval(a.lo - b.hi, a.hi - b.lo);
}

inline RationalInterval operator-(const RationalInterval& a) {
    return RationalInterval(-a.hi, -a.lo);
}

inline RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    ExactScalar p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    ExactScalar lo = p1, hi = p1;
    for (const ExactScalar* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return RationalInterval(std::move(lo), std::move(hi));
}

inline RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw enclosure_error("interval division by interval containing zero");
    ExactScalar p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    ExactScalar lo = p1, hi = p1;
    for (const ExactScalar* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return RationalInterval(std::move(lo), std::move(hi));
}

inline RationalInterval& operator+=(RationalInterval& a, const RationalInterval& b) { return a = a + b; }
inline RationalInterval& operator-=(RationalInterval& a, const RationalInterval& b) { return a = a - b; }
inline RationalInterval& operator*=(RationalInterval& a, const RationalInterval& b) { return a = a * b; }

// Widen outward to dyadic endpoints so later products stay cheap.
inline RationalInterval round_outward(const RationalInterval& a, unsigned bits) {
    return RationalInterval(dyadic_floor(a.lo, bits), dyadic_ceil(a.hi, bits));
}

// Enclosure of e^x for rational 0 <= x <= 8 via the Taylor partial sum
// (a lower bound: all omitted terms are positive) plus a geometric tail
// bound. Endpoints are then outward-rounded to 140 fractional bits, which
// keeps the width below 1e-36 while making every endpoint dyadic.
inline RationalInterval exp_enclosure(const ExactScalar& x) {
    if (x < 0 || x > 8) throw std::domain_error("exp_enclosure: need 0 <= x <= 8");
    if (x == 0) return RationalInterval(ExactScalar(1));
    const int terms = 90;
    ExactScalar sum(1), term(1);
    for (int k = 1; k <= terms; ++k) {
        term *= x / k;
        sum += term;
    }
    // tail: term_{terms} * sum_{j>=1} (x/(terms+1))^j <= term * r/(1-r)
    ExactScalar r = x / (terms + 1);
    ExactScalar tail = term * r / (1 - r);
    return round_outward(RationalInterval(sum, sum + tail), 140);
}

} // namespace bidiag

#endif
