#ifndef BIDIAG_CONDNUM_HPP
#define BIDIAG_CONDNUM_HPP

// Infinity-norm condition numbers of factor chains, evaluated without ever
// forming the product. The central trick: for a bidiagonal B the entrywise
// absolute value of the inverse is itself computable by one substitution,
//     |B^{-1}| = M(B)^{-1}   with M(B) the comparison matrix,
// so quantities like || |B_1^{-1}|...|B_k^{-1}| e ||_inf cost O(kn) flops and
// involve no subtractions at all. When all factors are nonnegative (or all
// checkerboard) these envelopes are not bounds but exact values.

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

namespace detail {

// Which absolute-value identities a factor supports. A global sign flip is
// harmless to |A_1 ... A_k| = |A_1| ... |A_k|, so "nonneg" here means
// "nonnegative up to one global sign", and zeros are wild in both patterns.
struct PatternFlags {
    bool nonneg = false;
    bool checker = false;
};

template <typename T>
PatternFlags pattern_flags(const Bidiagonal<T>& b, bool inverted) {
    bool dpos = true, dneg = true, opos = true, oneg = true;
    for (const T& x : b.diag) {
        if (x < T(0)) dpos = false;
        if (x > T(0)) dneg = false;
    }
    for (const T& x : b.off) {
        if (x < T(0)) opos = false;
        if (x > T(0)) oneg = false;
    }
    PatternFlags f;
    f.nonneg = (dpos && opos) || (dneg && oneg);
    f.checker = (dpos && oneg) || (dneg && opos);
    // Inverting swaps the patterns: the inverse of a nonnegative bidiagonal
    // matrix is checkerboard and vice versa.
    if (inverted) std::swap(f.nonneg, f.checker);
    return f;
}

} // namespace detail

// True when every factor's effective sign class (inversion swaps the two)
// is nonnegative, or every one is checkerboard: exactly the condition for
// |F_1 ... F_k| = |F_1| ... |F_k|.
template <typename T>
bool chain_has_identity_pattern(const FactorChain<T>& c) {
    bool all_nonneg = true, all_checker = true;
    for (const auto& f : c.factors) {
        detail::PatternFlags p = detail::pattern_flags(f.matrix, f.inverted);
        all_nonneg = all_nonneg && p.nonneg;
        all_checker = all_checker && p.checker;
    }
    return all_nonneg || all_checker;
}

namespace detail {

template <typename T>
void require_identity_pattern(const FactorChain<T>& c, const char* who) {
    if (!chain_has_identity_pattern(c))
        throw pattern_error(std::string(who) +
                            ": factors are neither all nonnegative nor all checkerboard");
}

// v <- |F| v for one factor, where |F| = |B| when the factor is stored
// directly and |F| = |B^{-1}| = M(B)^{-1} when it is stored inverted.
template <typename T>
std::vector<T> abs_factor_apply(const ChainFactor<T>& f, const std::vector<T>& v) {
    if (f.inverted) return solve(comparison_matrix(f.matrix), v);
    return multiply(abs(f.matrix), v);
}

// v <- |F^{-1}| v, the mirror of the above.
template <typename T>
std::vector<T> abs_factor_inverse_apply(const ChainFactor<T>& f, const std::vector<T>& v) {
    if (f.inverted) return multiply(abs(f.matrix), v);
    return solve(comparison_matrix(f.matrix), v);
}

template <typename T>
T max_entry(const std::vector<T>& v) {
    T m = v.empty() ? T(0) : v[0];
    for (const T& x : v)
        if (x > m) m = x;
    return m;
}

} // namespace detail

// |F_1| ... |F_k| v, factor k applied first; the diagonal scale contributes
// its (positive) entries at its slot. O(kn).
template <typename T>
std::vector<T> chain_abs_apply(const FactorChain<T>& c, std::vector<T> v) {
    validate(c);
    if (v.size() != c.n) throw std::invalid_argument("chain_abs_apply: dimension mismatch");
    const std::size_t k = c.factors.size();
    if (c.scale && c.scale->position == k)
        for (std::size_t i = 0; i < c.n; ++i) v[i] *= c.scale->diag[i];
    for (std::size_t idx = k; idx-- > 0;) {
        v = detail::abs_factor_apply(c.factors[idx], v);
        if (c.scale && c.scale->position == idx)
            for (std::size_t i = 0; i < c.n; ++i) v[i] *= c.scale->diag[i];
    }
    return v;
}

// |F_k^{-1}| ... |F_1^{-1}| v, factor 1 applied first; the scale divides.
template <typename T>
std::vector<T> chain_inv_abs_apply(const FactorChain<T>& c, std::vector<T> v) {
    validate(c);
    if (v.size() != c.n) throw std::invalid_argument("chain_inv_abs_apply: dimension mismatch");
    const std::size_t k = c.factors.size();
    if (c.scale && c.scale->position == 0)
        for (std::size_t i = 0; i < c.n; ++i) v[i] /= c.scale->diag[i];
    for (std::size_t idx = 0; idx < k; ++idx) {
        v = detail::abs_factor_inverse_apply(c.factors[idx], v);
        if (c.scale && c.scale->position == idx + 1)
            for (std::size_t i = 0; i < c.n; ++i) v[i] /= c.scale->diag[i];
    }
    return v;
}

// ||A||_inf for A = F_1 ... F_k as || |F_1|...|F_k| e ||_inf. Exact whenever
// the factors are all nonnegative or all checkerboard (pattern enforced).
template <typename T>
T chain_inf_norm(const FactorChain<T>& c) {
    validate(c);
    detail::require_identity_pattern(c, "chain_inf_norm");
    return detail::max_entry(chain_abs_apply(c, std::vector<T>(c.n, T(1))));
}

// ||A^{-1}||_inf via comparison-matrix substitutions, 3kn flops.
template <typename T>
T chain_inv_inf_norm(const FactorChain<T>& c) {
    validate(c);
    detail::require_identity_pattern(c, "chain_inv_inf_norm");
    return detail::max_entry(chain_inv_abs_apply(c, std::vector<T>(c.n, T(1))));
}

// Skeel condition number cond(A, x) = || |A^{-1}| |A| |x| ||_inf / ||x||_inf.
template <typename T>
T skeel_cond(const FactorChain<T>& c, const std::vector<T>& x) {
    validate(c);
    detail::require_identity_pattern(c, "skeel_cond");
    T xnorm = inf_norm(x);
    if (xnorm == T(0)) throw std::domain_error("skeel_cond: x must be nonzero");
    std::vector<T> w = chain_inv_abs_apply(c, chain_abs_apply(c, abs(x)));
    return detail::max_entry(w) / xnorm;
}

// ---------------------------------------------------------------------------
// Totally nonnegative matrices via the bidiagonal parameterization
//   A = L_{n-1} ... L_1 D U_1 ... U_{n-1},
// stored as one n x n parameter grid: D on the diagonal, the L multipliers
// below it, the U multipliers above. params(i, j) with i > j is the entry of
// L_{i-j} at subdiagonal row i; mirrored above the diagonal for U_{j-i}.

template <typename T>
struct TNFactorization {
    Matrix<T> params;

    TNFactorization() = default;
    explicit TNFactorization(Matrix<T> p) : params(std::move(p)) {
        if (params.rows() != params.cols() || params.rows() == 0)
            throw std::invalid_argument("tn factorization: params must be square, n >= 1");
    }

    std::size_t n() const { return params.rows(); }
};

// Expands the parameter grid into its 2n-1 factor chain: n-1 unit lower
// bidiagonal factors, the diagonal D, then n-1 unit upper ones. L_m carries
// nonzeros only in its last n-m off-diagonal slots, which is exactly the
// zero pattern the factorization theorem prescribes.
template <typename T>
FactorChain<T> tn_expand(const TNFactorization<T>& f) {
    const std::size_t n = f.n();
    for (std::size_t i = 0; i < n; ++i)
        if (!(f.params(i, i) > T(0)))
            throw std::domain_error("tn_expand: diagonal parameters must be positive");
    FactorChain<T> c;
    c.n = n;
    for (std::size_t m = n; m-- > 1;) { // L_{n-1} first, L_1 last
        std::vector<T> off(n - 1, T(0));
        for (std::size_t i = m; i < n; ++i) off[i - 1] = f.params(i, i - m);
        c.factors.push_back(ChainFactor<T>{
            Bidiagonal<T>(Orientation::Lower, std::vector<T>(n, T(1)), std::move(off)), false});
    }
    std::vector<T> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = f.params(i, i);
    c.scale = DiagonalScale<T>{n - 1, std::move(d)};
    for (std::size_t m = 1; m < n; ++m) { // U_1 first, U_{n-1} last
        std::vector<T> off(n - 1, T(0));
        for (std::size_t j = m; j < n; ++j) off[j - 1] = f.params(j - m, j);
        c.factors.push_back(ChainFactor<T>{
            Bidiagonal<T>(Orientation::Upper, std::vector<T>(n, T(1)), std::move(off)), false});
    }
    validate(c);
    return c;
}

// Condition number of a TN matrix from its parameterization, O(n^2) total:
// kappa = alpha * beta with alpha = ||A||_inf (row sums when the dense matrix
// is on hand, otherwise the chain norm) and beta = ||A^{-1}||_inf by
// comparison-matrix substitutions through the expanded chain. No subtraction
// occurs anywhere, hence the high relative accuracy.
template <typename T>
T tn_kinf(const TNFactorization<T>& f, const std::optional<Matrix<T>>& a_known = std::nullopt) {
    FactorChain<T> c = tn_expand(f);
    T alpha = a_known ? inf_norm(*a_known) : chain_inf_norm(c);
    return alpha * chain_inv_inf_norm(c);
}

// Random TN instance: D uniform in (0.5, 1.5), off parameters uniform [0, 1].
// The generator is taken by value so a caller-held seed gives one fixed
// instance; fork the generator to get families.
inline TNFactorization<double> random_tn(std::size_t n, std::mt19937_64 rng) {
    if (n == 0) throw std::invalid_argument("random_tn: need n >= 1");
    std::uniform_real_distribution<double> diag_dist(0.5, 1.5);
    std::uniform_real_distribution<double> off_dist(0.0, 1.0);
    Matrix<double> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = (i == j) ? diag_dist(rng) : off_dist(rng);
    return TNFactorization<double>(std::move(p));
}

namespace detail {

// One triangle of Neville elimination. Works inward from the bottom-left
// corner, one subdiagonal per sweep; within a sweep rows ascend, and each
// target is cleared by subtracting the (already updated) row above it. The
// multipliers are exactly the parameters of the L factors, outermost first.
// With mirror set, stores params transposed (used for the U triangle).
template <typename T>
void neville_lower_sweeps(Matrix<T>& w, Matrix<T>& params, bool mirror) {
    const std::size_t n = w.rows();
    for (std::size_t s = 1; s < n; ++s) {
        const std::size_t d = n - s; // subdiagonal cleared in this sweep
        for (std::size_t r = d; r < n; ++r) {
            const std::size_t col = r - d;
            if (w(r, col) == T(0)) continue; // multiplier zero, nothing to do
            if (w(r - 1, col) == T(0))
                throw not_tn_error("neville_bd: zero pivot above a nonzero target");
            T m = w(r, col) / w(r - 1, col);
            if (mirror)
                params(col, r) = m;
            else
                params(r, col) = m;
            for (std::size_t j = col; j < n; ++j) w(r, j) -= m * w(r - 1, j);
        }
    }
}

} // namespace detail

// Bidiagonal parameterization of a nonsingular TN matrix by exact-rational
// Neville elimination: the L triangle is peeled off the left, then the same
// sweeps on the transpose of the remaining upper-triangular part yield the
// U triangle, leaving D. tn_expand of the result reproduces A exactly.
inline TNFactorization<ExactScalar> neville_bd(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols() || n == 0)
        throw std::invalid_argument("neville_bd: square matrix, n >= 1 required");
    ExactMatrix params(n, n, ExactScalar(0));
    ExactMatrix w = a;
    detail::neville_lower_sweeps(w, params, false);
    ExactMatrix v = transpose(w);
    detail::neville_lower_sweeps(v, params, true);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(v(i, i) > 0))
            throw not_tn_error("neville_bd: nonpositive diagonal pivot");
        params(i, i) = v(i, i);
    }
    return TNFactorization<ExactScalar>(std::move(params));
}

// Nearest-double parameters, the floating-point factorization tn_kinf runs on.
inline TNFactorization<double> round_to_double(const TNFactorization<ExactScalar>& f) {
    const std::size_t n = f.n();
    Matrix<double> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = to_double(f.params(i, j));
    return TNFactorization<double>(std::move(p));
}

} // namespace bidiag

#endif
