#ifndef BIDIAG_SVALS_HPP
#define BIDIAG_SVALS_HPP

// Singular values of bidiagonal matrices, computed without forming B^T B.
// The 2n x 2n symmetric tridiagonal with zero diagonal and the entries of B
// interleaved on the offdiagonal has eigenvalues +/- sigma_i(B), so Sturm
// counts plus bisection deliver any singular value by index, with no
// squaring anywhere and unconditional convergence.

#include <cstddef>
#include <vector>

#include "bidiag/bidiagonal.hpp"

namespace bidiag {

struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off; // length diag.size() - 1

    SymTridiagonal(std::vector<double> d, std::vector<double> e);
    std::size_t size() const { return diag.size(); }
};

// The Golub-Kahan form: zero diagonal, offdiagonal
// (b_11, b_12, b_22, b_23, ..., b_nn). Lower bidiagonal input is transposed
// first; the singular values do not care.
SymTridiagonal golub_kahan_tridiagonal(const Bidiagonal<double>& b);

// Number of eigenvalues of t strictly below x, by the classic LDL^T pivot
// count with the EISPACK zero-pivot safeguard.
std::size_t sturm_count_below(const SymTridiagonal& t, double x);

// k-th eigenvalue in ascending order (0-based), bisected to an interval of
// width 0.25 * tol * max(1, |spectral bound|).
double eigenvalue_by_index(const SymTridiagonal& t, std::size_t k, double tol);

inline constexpr double sval_default_tol = 1e-12;

// All n singular values, descending, each within tol * max(1, sigma_1).
std::vector<double> singular_values(const Bidiagonal<double>& b,
                                    double tol = sval_default_tol);

// mu = prod max(|alpha_i|, 1/|alpha_i|): the two-sided relative bound on
// singular values under entrywise scaling of B by the alphas.
double sval_perturbation_mu(const std::vector<double>& alphas);

// The 2x2 demonstration that the two-sided bound does NOT survive products:
// B_1 B_2 = I, yet perturbing each factor entrywise by delta turns the
// product into [[1, 2x*delta], [0, 1]], whose singular values are driven
// arbitrarily far from 1 as x grows.
struct ProductSvalCounterexample {
    double x = 0, delta = 0;
    double t = 0;                  // corner entry 2*x*delta of the perturbed product
    double sigma1 = 0, sigma2 = 0; // computed by bisection
    double sigma1_closed = 0, sigma2_closed = 0;
    double rel_change_sigma1 = 0;  // sigma1 - 1, approximately 2*x*delta
    double rel_change_sigma2 = 0;  // 1 - sigma2, approximately 1 - 1/(2*x*delta)
};

ProductSvalCounterexample product_sval_counterexample(double x, double delta);

} // namespace bidiag

#endif
