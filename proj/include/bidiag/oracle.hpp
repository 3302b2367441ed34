#ifndef BIDIAG_ORACLE_HPP
#define BIDIAG_ORACLE_HPP

// Exact rational reference oracle. Everything here is slow and sure: it is
// the measuring stick the floating-point paths are tested against, so it
// shares no code with them beyond the data types. Intended for n up to a
// few dozen (dense elimination) and n <= 7 for minor enumeration.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

inline Bidiagonal<ExactScalar> to_exact(const Bidiagonal<double>& b) {
    return Bidiagonal<ExactScalar>(b.orientation, to_exact(b.diag), to_exact(b.off));
}

inline Bidiagonal<double> to_double(const Bidiagonal<ExactScalar>& b) {
    return Bidiagonal<double>(b.orientation, to_double(b.diag), to_double(b.off));
}

inline FactorChain<ExactScalar> to_exact(const FactorChain<double>& c) {
    FactorChain<ExactScalar> e;
    e.n = c.n;
    for (const auto& f : c.factors)
        e.factors.push_back(ChainFactor<ExactScalar>{to_exact(f.matrix), f.inverted});
    if (c.scale)
        e.scale = DiagonalScale<ExactScalar>{c.scale->position, to_exact(c.scale->diag)};
    return e;
}

inline FactorChain<double> to_double(const FactorChain<ExactScalar>& c) {
    FactorChain<double> d;
    d.n = c.n;
    for (const auto& f : c.factors)
        d.factors.push_back(ChainFactor<double>{to_double(f.matrix), f.inverted});
    if (c.scale)
        d.scale = DiagonalScale<double>{c.scale->position, to_double(c.scale->diag)};
    return d;
}

// Exact product of a chain (inverted factors via exact substitution).
inline ExactMatrix exact_chain_dense(const FactorChain<ExactScalar>& c) { return dense(c); }

// Determinant by Bareiss fraction-free elimination. Row swaps flip the sign.
inline ExactScalar exact_determinant(ExactMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("exact_determinant: square matrix required");
    if (n == 0) return ExactScalar(1);
    ExactScalar prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return ExactScalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    ExactScalar det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Gaussian elimination with exact arithmetic; first nonzero pivot suffices.
// Returns the inverse; throws singular_error for singular input.
inline ExactMatrix exact_inverse(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("exact_inverse: square matrix required");
    ExactMatrix w = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w(p, k) == 0) ++p;
        if (p == n) throw singular_error("exact_inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        ExactScalar piv = w(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            ExactScalar m = w(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= m * w(k, j);
                inv(i, j) -= m * inv(k, j);
            }
        }
    }
    return inv;
}

inline std::vector<ExactScalar> exact_solve(const ExactMatrix& a, const std::vector<ExactScalar>& b) {
    return multiply(exact_inverse(a), b);
}

inline ExactScalar exact_inf_norm(const ExactMatrix& a) { return inf_norm(a); }

inline ExactScalar exact_condition_inf(const ExactMatrix& a) {
    return inf_norm(a) * inf_norm(exact_inverse(a));
}

// ---------------------------------------------------------------------------
// Total nonnegativity by minor enumeration.

struct TnCheckResult {
    bool tn = true;
    std::vector<std::size_t> rows, cols; // zero-based witness of the first bad minor
};

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    Matrix<T> s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
    return s;
}

// Laplace expansion along the first row; only sane for k <= 7.
inline RationalInterval interval_determinant(const Matrix<RationalInterval>& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    RationalInterval det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).exact() && a(0, j).lo == 0) continue;
        Matrix<RationalInterval> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = a(i, c);
            }
        }
        RationalInterval term = a(0, j) * interval_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace detail

// Every square minor must be >= 0. Enumerates by size, smallest first, so a
// witness points at a smallest violating minor.
inline TnCheckResult is_totally_nonnegative(const ExactMatrix& a, std::size_t max_n = 7) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("is_totally_nonnegative: square matrix required");
    if (n > max_n) throw std::invalid_argument("is_totally_nonnegative: dimension above enumeration guard");
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                if (exact_determinant(detail::submatrix(a, rows, cols)) < 0)
                    return TnCheckResult{false, rows, cols};
            } while (detail::next_combination(cols, n));
        } while (detail::next_combination(rows, n));
    }
    return TnCheckResult{true, {}, {}};
}

// Interval variant for matrices with irrational entries known only through
// enclosures. Signs are certified, never guessed: a minor whose enclosure
// straddles zero (other than the exact zero) raises enclosure_error.
inline TnCheckResult is_totally_nonnegative(const Matrix<RationalInterval>& a,
                                            std::size_t max_n = 7) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("is_totally_nonnegative: square matrix required");
    if (n > max_n) throw std::invalid_argument("is_totally_nonnegative: dimension above enumeration guard");
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                RationalInterval det = detail::interval_determinant(detail::submatrix(a, rows, cols));
                if (det.hi < 0) return TnCheckResult{false, rows, cols};
                if (det.lo < 0)
                    throw enclosure_error("is_totally_nonnegative: minor enclosure straddles zero");
            } while (detail::next_combination(cols, n));
        } while (detail::next_combination(rows, n));
    }
    return TnCheckResult{true, {}, {}};
}

// ---------------------------------------------------------------------------
// Exact polynomials (coefficients low to high) for small eigenvalue checks.

using ExactPoly = std::vector<ExactScalar>;

namespace poly {

inline ExactPoly trim(ExactPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int degree(const ExactPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ExactPoly derivative(const ExactPoly& p) {
    ExactPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(ExactScalar(static_cast<unsigned>(i)) * p[i]);
    return trim(std::move(d));
}

inline ExactScalar evaluate(const ExactPoly& p, const ExactScalar& x) {
    ExactScalar v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline ExactPoly remainder(ExactPoly a, const ExactPoly& b) {
    a = trim(std::move(a));
    if (b.empty()) throw std::invalid_argument("poly remainder: division by zero polynomial");
    while (degree(a) >= degree(b)) {
        ExactScalar c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

inline ExactPoly gcd(ExactPoly a, ExactPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        ExactPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        ExactScalar lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline bool is_squarefree(const ExactPoly& p) { return degree(gcd(p, derivative(p))) <= 0; }

inline std::vector<ExactPoly> sturm_sequence(const ExactPoly& p) {
    std::vector<ExactPoly> s;
    s.push_back(trim(p));
    s.push_back(derivative(p));
    while (!s.back().empty() && degree(s.back()) > 0) {
        ExactPoly r = remainder(s[s.size() - 2], s.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        s.push_back(std::move(r));
    }
    return s;
}

inline int sign_of(const ExactScalar& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign variations of the Sturm sequence at x; the two infinities are the
// usual leading-coefficient limits.
enum class AtPoint { Value, PlusInfinity, MinusInfinity };

inline int sign_variations(const std::vector<ExactPoly>& s, AtPoint where,
                           const ExactScalar& x = ExactScalar(0)) {
    int variations = 0, prev = 0;
    for (const ExactPoly& p : s) {
        if (p.empty()) continue;
        int sg;
        switch (where) {
        case AtPoint::Value: sg = sign_of(evaluate(p, x)); break;
        case AtPoint::PlusInfinity: sg = sign_of(p.back()); break;
        default:
            sg = sign_of(p.back());
            if (degree(p) % 2 == 1) sg = -sg;
        }
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++variations;
        prev = sg;
    }
    return variations;
}

// Distinct real roots in the open interval (a, +infinity).
inline int distinct_roots_above(const ExactPoly& p, const ExactScalar& a) {
    auto s = sturm_sequence(p);
    return sign_variations(s, AtPoint::Value, a) - sign_variations(s, AtPoint::PlusInfinity);
}

inline int distinct_real_roots(const ExactPoly& p) {
    auto s = sturm_sequence(p);
    return sign_variations(s, AtPoint::MinusInfinity) - sign_variations(s, AtPoint::PlusInfinity);
}

} // namespace poly

// Monic characteristic polynomial det(lambda I - A) by the trace recurrence.
inline ExactPoly characteristic_polynomial(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("characteristic_polynomial: square matrix required");
    ExactPoly c(n + 1, ExactScalar(0));
    c[n] = 1;
    ExactMatrix m = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = multiply(a, m);
        ExactScalar tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        ExactScalar ck = -tr / ExactScalar(static_cast<unsigned>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

} // namespace bidiag

#endif
