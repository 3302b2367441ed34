#include "bidiag/solve.hpp"

#include <cmath>

#include "bidiag/condnum.hpp"
#include "bidiag/constants.hpp"

namespace bidiag {

namespace {

// Per-stage accumulation factors. gamma_1 covers the single rounding of a
// diagonal scale application (and of its inversion, which is entrywise).
struct StageConstants {
    double gamma1, gamma2, tau;

    explicit StageConstants(std::size_t n)
        : gamma1(gamma_constant<double>(1, unit_roundoff)),
          gamma2(gamma_constant<double>(2, unit_roundoff)),
          tau(tau_constant<double>(n, gamma_constant<double>(2, unit_roundoff))) {}
};

// Product over stages of (1 + c_i), minus one. direct_c goes with factors
// stored directly, inverted_c with inverted ones.
double accumulate_coefficient(const FactorChain<double>& c, double direct_c, double inverted_c,
                              double scale_c) {
    double p = 1.0;
    for (const auto& f : c.factors) p *= 1.0 + (f.inverted ? inverted_c : direct_c);
    if (c.scale) p *= 1.0 + scale_c;
    return p - 1.0;
}

} // namespace

ProductSolveResult solve_product_chain(const FactorChain<double>& c, const std::vector<double>& b) {
    ProductSolveResult r;
    r.x = solve(c, b);
    const StageConstants sc(c.n);
    const bool tight = chain_has_identity_pattern(c);

    // substitution perturbs a direct factor by gamma_2; an inverted factor
    // is applied by multiplication, whose gamma_2 backward error on B means
    // a tau-sized perturbation of the factor B^{-1} itself
    r.residual.kind = BudgetKind::ResidualBound;
    r.residual.coefficient = accumulate_coefficient(c, sc.gamma2, sc.tau, sc.gamma1);
    r.residual.envelope = chain_abs_apply(c, abs(r.x));
    r.residual.tight = tight;

    r.forward.kind = BudgetKind::ForwardBoundCoefficient;
    r.forward.coefficient = accumulate_coefficient(c, sc.tau, sc.gamma2, sc.gamma1);
    r.forward.envelope = chain_inv_abs_apply(c, abs(b));
    r.forward.tight = tight;
    return r;
}

InverseSolveResult solve_inverse_chain(const FactorChain<double>& c, const std::vector<double>& b) {
    InverseSolveResult r;
    r.x = multiply(c, b);
    const StageConstants sc(c.n);
    const bool tight = chain_has_identity_pattern(c);

    // the chain IS A^{-1}, so multiplying through it perturbs each factor by
    // gamma_2 (direct) or tau (inverted, applied by substitution)
    r.forward.kind = BudgetKind::InverseChainForward;
    r.forward.coefficient = accumulate_coefficient(c, sc.gamma2, sc.tau, sc.gamma1);
    r.forward.envelope = chain_abs_apply(c, abs(b));
    r.forward.tight = tight;

    // the residual view inverts every perturbed factor, swapping the roles
    r.residual.kind = BudgetKind::InverseChainResidual;
    r.residual.coefficient = accumulate_coefficient(c, sc.tau, sc.gamma2, sc.gamma1);
    r.residual.envelope = chain_inv_abs_apply(c, abs(r.x));
    r.residual.tight = tight;
    return r;
}

std::vector<double> bp_solve(const std::vector<double>& points, const std::vector<double>& b) {
    if (points.size() != b.size()) throw std::invalid_argument("bp_solve: dimension mismatch");
    return multiply(vandermonde_inverse_chain(points), b);
}

std::vector<double> dense_lu_solve(Matrix<double> a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("dense_lu_solve: square matrix required");
    if (b.size() != n) throw std::invalid_argument("dense_lu_solve: dimension mismatch");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) throw singular_error("dense_lu_solve: zero pivot column");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double m = a(i, k) / a(k, k);
            a(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
            b[i] -= m * b[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
        b[i] = s / a(i, i);
    }
    return b;
}

} // namespace bidiag
