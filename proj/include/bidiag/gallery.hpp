#ifndef BIDIAG_GALLERY_HPP
#define BIDIAG_GALLERY_HPP

// Named example matrices together with their bidiagonal factor chains and
// the closed-form facts (determinants, inverses, eigenvalues) those chains
// make cheap. Exact rational forms are the source of truth; the floating
// fields are rounded from them.

#include <cstddef>
#include <optional>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/condnum.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

enum class GalleryName { Pascal, Hilbert, Frank, MinIJ, KMS, Creation, TriToeplitzExample };

struct GalleryMatrix {
    GalleryName name = GalleryName::Pascal;
    std::size_t n = 0;
    std::vector<double> parameters; // name-specific, e.g. {rho} for KMS
    std::optional<Matrix<double>> dense;
    std::optional<FactorChain<double>> chain;
    std::optional<ExactMatrix> exact;
    // true when the double dense form reproduces the exact entries bit for bit
    bool representable = false;
};

// Exact building blocks, usable on their own in tests.
ExactMatrix pascal_exact(std::size_t n);
ExactMatrix pascal_r_exact(std::size_t n); // upper Cholesky factor, binomials down each column
ExactMatrix pascal_s_exact(std::size_t n); // R with alternating row signs; an involution
ExactMatrix hilbert_exact(std::size_t n);
TNFactorization<ExactScalar> hilbert_neville(std::size_t n);

// Symmetric positive definite matrix of binomial coefficients, all of whose
// bidiagonal parameters equal one. Dense double form only while the entries
// are exactly representable (n <= 25).
GalleryMatrix pascal(std::size_t n);

// S_n^2 = I, verified in exact arithmetic.
bool pascal_involution_check(std::size_t n);

// Totally positive, entries 1/(i+j-1); the chain comes from exact Neville
// elimination with the parameters rounded to double afterwards.
GalleryMatrix hilbert(std::size_t n);

// Upper Hessenberg integer matrix with unit determinant; row differencing
// reduces it to one lower bidiagonal factor.
GalleryMatrix frank(std::size_t n);

// min(i,j) matrix; Cholesky chain of two inverted Toeplitz factors, and a
// tridiagonal inverse whose eigenvalues have a closed form.
GalleryMatrix minij(std::size_t n);

// Eigenvalues 2(1 + cos(2k*pi/(2n+1))), k = 1..n, of the inverse of the
// min(i,j) matrix, in k order (decreasing). The eigenvalues of the matrix
// itself are their reciprocals.
std::vector<double> minij_inverse_eigenvalues(std::size_t n);

// Symmetric Toeplitz rho^|i-j|. The LDL^T chain needs positive pivots, so it
// is present only for |rho| < 1; the dense and exact forms exist for any rho.
GalleryMatrix kms(std::size_t n, double rho);

// Upper bidiagonal with zero diagonal and superdiagonal 1, 2, ..., n-1; its
// exponential is the Pascal Cholesky factor.
GalleryMatrix creation(std::size_t n);
Bidiagonal<double> creation_bidiagonal(std::size_t n);

// Iteration matrix B = (-D-L)^{-1} U of Gauss-Seidel applied to a tridiagonal
// matrix with negative diagonal and nonnegative off-diagonals. Both chain
// factors are totally nonnegative, hence so is B and its eigenvalues are
// real and nonnegative.
FactorChain<double> gauss_seidel_iteration_matrix(const std::vector<double>& diag,
                                                  const std::vector<double>& sub,
                                                  const std::vector<double>& sup);

// Tridiagonal inverse of the KMS matrix: corners 1, interior 1+rho^2, off
// -rho, all over 1-rho^2. Singular at rho = +-1.
template <typename T>
Matrix<T> kms_inverse(std::size_t n, const T& rho) {
    if (n == 0) throw std::invalid_argument("kms_inverse: need n >= 1");
    if (n == 1) return Matrix<T>::identity(1);
    T denom = T(1) - rho * rho;
    if (denom == T(0)) throw singular_error("kms_inverse: matrix is singular at rho = +-1");
    Matrix<T> a(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = (i == 0 || i == n - 1) ? T(1) / denom : (T(1) + rho * rho) / denom;
        if (i + 1 < n) {
            a(i, i + 1) = -rho / denom;
            a(i + 1, i) = -rho / denom;
        }
    }
    return a;
}

} // namespace bidiag

#endif
