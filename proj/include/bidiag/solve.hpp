#ifndef BIDIAG_SOLVE_HPP
#define BIDIAG_SOLVE_HPP

// Linear solves through factor chains, each answer shipped with a computable
// error budget: a scalar coefficient and a nonnegative envelope vector such
// that the error quantity is bounded entrywise by coefficient * envelope.
// The envelopes are the O(kn) comparison-matrix products of the condition
// number machinery; when every factor shares a sign pattern they equal
// |A||x| resp. |A^{-1}||b| exactly, otherwise they are entrywise upper
// bounds for them (budget.tight records which).
//
// Per-stage backward errors: one bidiagonal substitution or multiplication
// perturbs its factor entrywise by at most gamma_2, and inverting a
// perturbed bidiagonal matrix amplifies that to tau(n, gamma_2). A direct
// factor therefore contributes (1 + gamma_2) to residual-style products and
// (1 + tau) to forward-style ones, an inverted factor the other way around,
// and a diagonal scale (1 + gamma_1) to both.

#include <cstddef>
#include <vector>

#include "bidiag/chain.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

enum class BudgetKind {
    ResidualBound,           // |b - A xhat|  <= c * env,  env ~ |A||xhat|
    ForwardBoundCoefficient, // |x - xhat|    <= c * env,  env ~ |A^{-1}||b|
    InverseChainForward,     // |x - xhat|    <= c * env,  env ~ |A^{-1}||b|
    InverseChainResidual,    // |b - A xhat|  <= c * env,  env ~ |A||xhat|
};

struct ErrorBudget {
    BudgetKind kind{};
    double coefficient = 0.0;
    std::vector<double> envelope;
    // true when the factors share a sign pattern, so the envelope IS the
    // advertised product; false means it is only an entrywise upper bound
    bool tight = false;
};

struct ProductSolveResult {
    std::vector<double> x;
    ErrorBudget residual; // ResidualBound
    ErrorBudget forward;  // ForwardBoundCoefficient
};

struct InverseSolveResult {
    std::vector<double> x;
    ErrorBudget forward;  // InverseChainForward
    ErrorBudget residual; // InverseChainResidual
};

// Solve (F_1 ... F_k) x = b by k substitutions (or multiplications, for
// factors stored inverted).
ProductSolveResult solve_product_chain(const FactorChain<double>& c, const std::vector<double>& b);

// The chain represents A^{-1}; x = chain * b by k multiplications.
InverseSolveResult solve_inverse_chain(const FactorChain<double>& c, const std::vector<double>& b);

// The 2n-2 bidiagonal factors of V^{-1} for the Vandermonde matrix
// V(i, j) = x_j^i (0-based; points across columns, powers down rows):
// first the n-1 upper factors carrying divided-difference denominators,
// then the n-1 unit lower Horner factors, so that applying the chain to a
// vector runs Horner stages first. For 0 <= x_0 < x_1 < ... every factor is
// checkerboard, which is what makes the solve componentwise accurate.
template <typename T>
FactorChain<T> vandermonde_inverse_chain(const std::vector<T>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("vandermonde_inverse_chain: need at least one point");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw std::domain_error("vandermonde_inverse_chain: points must be distinct");

    FactorChain<T> c;
    c.n = n;
    if (n == 1) return c;

    // upper factors, outermost first: diagonal 1 (rows 0..k) then
    // 1/(x_j - x_{j-k-1}), superdiagonal the negatives of those quotients
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::vector<T> diag(n, T(1)), off(n - 1, T(0));
        for (std::size_t j = k + 1; j < n; ++j) {
            T inv = T(1) / (points[j] - points[j - k - 1]);
            diag[j] = inv;
            off[j - 1] = -inv;
        }
        c.factors.push_back(ChainFactor<T>{
            Bidiagonal<T>(Orientation::Upper, std::move(diag), std::move(off)), false});
    }
    // unit lower Horner factors, innermost last: subdiagonal -x_k in rows
    // k+1..n-1
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<T> off(n - 1, T(0));
        for (std::size_t j = k + 1; j < n; ++j) off[j - 1] = -points[k];
        c.factors.push_back(ChainFactor<T>{
            Bidiagonal<T>(Orientation::Lower, std::vector<T>(n, T(1)), std::move(off)), false});
    }
    return c;
}

// y = V^{-1} b without forming V, O(n^2).
std::vector<double> bp_solve(const std::vector<double>& points, const std::vector<double>& b);

// Partial-pivoting LU baseline for the accuracy comparisons.
std::vector<double> dense_lu_solve(Matrix<double> a, std::vector<double> b);

} // namespace bidiag

#endif
