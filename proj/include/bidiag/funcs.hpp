#ifndef BIDIAG_FUNCS_HPP
#define BIDIAG_FUNCS_HPP

// Functions of bidiagonal matrices through divided differences. For an upper
// bidiagonal B, f(B) is upper triangular with
//     f(B)_ij = b_{i,i+1} ... b_{j-1,j} * f[b_ii, ..., b_jj],
// so one triangular divided-difference table over the diagonal prices every
// entry. Repeated diagonal entries are handled confluently, which is where
// derivatives come in; with unit offdiagonal the (1,n) entry IS the divided
// difference f[b_11,...,b_nn].
//
// Upper triangular Toeplitz matrices t_0 I + t_1 N + t_2 N^2 + ... (N the
// shift) form a commutative algebra in which N^n = 0, so f(T) is the Taylor
// polynomial of f about t_0, degree n-1, evaluated on the nilpotent part.
// First rows determine everything and are what we pass around.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/oracle.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

// A scalar function together with as many derivatives as it cares to offer.
// eval(x, k) returns f^{(k)}(x); max_order < 0 means unbounded. Confluent
// divided differences are the only consumers of k > 0.
template <typename T>
struct ScalarFunction {
    std::string name;
    int max_order = -1;
    std::function<T(const T&, int)> derivative;

    T eval(const T& x, int order = 0) const {
        if (order < 0) throw std::invalid_argument("ScalarFunction: negative derivative order");
        if (max_order >= 0 && order > max_order)
            throw capability_error("ScalarFunction '" + name + "': derivative order " +
                                   std::to_string(order) + " exceeds max_order " +
                                   std::to_string(max_order));
        return derivative(x, order);
    }
};

namespace detail {

template <typename T>
T factorial_of(int k) {
    T r(1);
    for (int i = 2; i <= k; ++i) r = r * T(i);
    return r;
}

// (p)_k falling factorial p(p-1)...(p-k+1)
template <typename T>
T falling(int p, int k) {
    T r(1);
    for (int i = 0; i < k; ++i) r = r * T(p - i);
    return r;
}

} // namespace detail

inline ScalarFunction<double> exp_function() {
    return {"exp", -1, [](const double& x, int) { return std::exp(x); }};
}

// e^x over exact points, every derivative the same enclosure. Points must be
// exact intervals (they come from lifting doubles, never from arithmetic).
inline ScalarFunction<RationalInterval> exp_interval_function() {
    return {"exp", -1, [](const RationalInterval& x, int) {
                if (!x.exact())
                    throw enclosure_error("exp over intervals: evaluation point must be exact");
                return exp_enclosure(x.lo);
            }};
}

// f(x) = 1/x, f^{(k)}(x) = (-1)^k k! / x^{k+1}
template <typename T>
ScalarFunction<T> reciprocal_function() {
    return {"inv", -1, [](const T& x, int k) {
                if (x == T(0)) throw std::domain_error("reciprocal: pole at zero");
                T p = x;
                for (int i = 0; i < k; ++i) p = p * x;
                T r = detail::factorial_of<T>(k) / p;
                return k % 2 ? -r : r;
            }};
}

// f(x) = x^p for integer p >= 0
template <typename T>
ScalarFunction<T> monomial_function(int p) {
    if (p < 0) throw std::invalid_argument("monomial_function: power must be >= 0");
    return {"monomial:" + std::to_string(p), -1, [p](const T& x, int k) {
                if (k > p) return T(0);
                T r = detail::falling<T>(p, k);
                for (int i = 0; i < p - k; ++i) r = r * x;
                return r;
            }};
}

// Triangular table of divided differences f[x_i,...,x_j] over the given
// points, stored at (i, j) for j >= i. Equal points must sit in contiguous
// runs; a run of length m needs derivatives up to order m-1.
template <typename T>
struct DividedDifferenceTable {
    std::vector<T> points;
    Matrix<T> table;

    const T& operator()(std::size_t i, std::size_t j) const { return table(i, j); }
};

template <typename T>
DividedDifferenceTable<T> divided_differences(const ScalarFunction<T>& f,
                                              const std::vector<T>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("divided_differences: need at least one point");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            if (points[j] == points[i] && !(points[j - 1] == points[i]))
                throw std::domain_error("divided_differences: equal points must be contiguous");

    DividedDifferenceTable<T> t{points, Matrix<T>(n, n, T(0))};
    for (std::size_t i = 0; i < n; ++i) t.table(i, i) = f.eval(points[i], 0);
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t i = 0; i + len < n; ++i) {
            const std::size_t j = i + len;
            if (points[i] == points[j]) {
                int k = static_cast<int>(len);
                t.table(i, j) = f.eval(points[i], k) / detail::factorial_of<T>(k);
            } else {
                t.table(i, j) = (t.table(i + 1, j) - t.table(i, j - 1)) / (points[j] - points[i]);
            }
        }
    }
    return t;
}

// Dense f(B) for bidiagonal B. Lower orientation goes through the transpose,
// which leaves the formula untouched.
template <typename T>
Matrix<T> func_of_bidiagonal(const ScalarFunction<T>& f, const Bidiagonal<T>& b) {
    if (b.orientation == Orientation::Lower)
        return transpose(func_of_bidiagonal(f, transpose(b)));
    const std::size_t n = b.diag.size();
    auto t = divided_differences(f, b.diag);
    Matrix<T> r(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = t(i, i);
        T prod(1);
        for (std::size_t j = i + 1; j < n; ++j) {
            prod = prod * b.off[j - 1];
            r(i, j) = prod * t(i, j);
        }
    }
    return r;
}

// f[lambda_1,...,lambda_n], which is also the corner entry of f applied to
// the bidiagonal matrix with that diagonal and unit offdiagonal.
template <typename T>
T opitz_entry(const ScalarFunction<T>& f, const std::vector<T>& lambdas) {
    auto t = divided_differences(f, lambdas);
    return t(0, lambdas.size() - 1);
}

// First row of a product of two upper triangular Toeplitz matrices:
// convolution truncated at n.
template <typename T>
std::vector<T> toeplitz_first_row_product(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("toeplitz_first_row_product: length mismatch");
    const std::size_t n = a.size();
    std::vector<T> r(n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// Dense n x n matrix with (i, j) = t_{j-i} for j >= i.
template <typename T>
Matrix<T> tri_toeplitz_dense(const std::vector<T>& first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw std::invalid_argument("tri_toeplitz_dense: empty first row");
    Matrix<T> m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = first_row[j - i];
    return m;
}

// First row of f(T) for T upper triangular Toeplitz with the given first
// row: Taylor coefficients of f about t_0 composed with the nilpotent part,
// truncated at degree n-1 (exact, since the nilpotent part has index n).
template <typename T>
std::vector<T> tri_toeplitz_function(const ScalarFunction<T>& f, const std::vector<T>& first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw std::invalid_argument("tri_toeplitz_function: empty first row");
    std::vector<T> nilpotent(n, T(0));
    for (std::size_t i = 1; i < n; ++i) nilpotent[i] = first_row[i];

    std::vector<T> result(n, T(0));
    std::vector<T> power(n, T(0)); // nilpotent^k, first row
    power[0] = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        T coeff = f.eval(first_row[0], static_cast<int>(k)) /
                  detail::factorial_of<T>(static_cast<int>(k));
        for (std::size_t i = 0; i < n; ++i) result[i] = result[i] + coeff * power[i];
        if (k + 1 < n) power = toeplitz_first_row_product(power, nilpotent);
    }
    return result;
}

// Exponentials of nonnegative bidiagonal matrices are totally nonnegative.
// This check runs the whole pipeline rigorously: diagonal entries are lifted
// to exact rationals, e^x enclosures feed an interval divided-difference
// table, and the minor enumeration certifies every sign from the enclosures
// alone. Returns the verdict (which the theorem says is always true); throws
// enclosure_error if some minor's interval straddles zero.
inline bool exp_bidiagonal_tn_check(const Bidiagonal<double>& b, std::size_t m_max = 6) {
    for (double x : b.diag) {
        if (x < 0) throw std::domain_error("exp_bidiagonal_tn_check: negative diagonal entry");
        if (x > 8) throw std::domain_error("exp_bidiagonal_tn_check: diagonal entry above 8, "
                                           "outside the exponential enclosure's domain");
    }
    for (double x : b.off)
        if (x < 0) throw std::domain_error("exp_bidiagonal_tn_check: negative offdiagonal entry");

    auto lift = [](const std::vector<double>& v) {
        std::vector<RationalInterval> r;
        r.reserve(v.size());
        for (double x : v) r.emplace_back(to_exact(x));
        return r;
    };
    Bidiagonal<RationalInterval> eb(b.orientation, lift(b.diag), lift(b.off));
    Matrix<RationalInterval> f = func_of_bidiagonal(exp_interval_function(), eb);
    return is_totally_nonnegative(f, m_max).tn;
}

} // namespace bidiag

#endif
