#include "bidiag/gallery.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bidiag {

namespace {

bool dense_matches_exact(const Matrix<double>& d, const ExactMatrix& e) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (to_exact(d(i, j)) != e(i, j)) return false;
    return true;
}

void finish(GalleryMatrix& g) {
    g.representable = g.dense && g.exact && dense_matches_exact(*g.dense, *g.exact);
}

} // namespace

ExactMatrix pascal_exact(std::size_t n) {
    if (n == 0) throw std::invalid_argument("pascal: need n >= 1");
    ExactMatrix p(n, n, ExactScalar(1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) p(i, j) = p(i - 1, j) + p(i, j - 1);
    return p;
}

ExactMatrix pascal_r_exact(std::size_t n) {
    if (n == 0) throw std::invalid_argument("pascal: need n >= 1");
    // column j holds binomial(j, i) for i <= j; additive recurrence again
    ExactMatrix r(n, n, ExactScalar(0));
    for (std::size_t j = 0; j < n; ++j) r(0, j) = 1;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = r(i - 1, j - 1) + r(i, j - 1);
    return r;
}

ExactMatrix pascal_s_exact(std::size_t n) {
    ExactMatrix s = pascal_r_exact(n);
    for (std::size_t i = 1; i < n; i += 2)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = -s(i, j);
    return s;
}

ExactMatrix hilbert_exact(std::size_t n) {
    if (n == 0) throw std::invalid_argument("hilbert: need n >= 1");
    ExactMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = ExactScalar(1) / ExactScalar(static_cast<long>(i + j + 1));
    return h;
}

TNFactorization<ExactScalar> hilbert_neville(std::size_t n) {
    return neville_bd(hilbert_exact(n));
}

GalleryMatrix pascal(std::size_t n) {
    GalleryMatrix g;
    g.name = GalleryName::Pascal;
    g.n = n;
    g.exact = pascal_exact(n);
    if (n <= 25) g.dense = to_double(*g.exact);
    g.chain = tn_expand(TNFactorization<double>(Matrix<double>(n, n, 1.0)));
    finish(g);
    return g;
}

bool pascal_involution_check(std::size_t n) {
    ExactMatrix s = pascal_s_exact(n);
    return multiply(s, s) == ExactMatrix::identity(n);
}

GalleryMatrix hilbert(std::size_t n) {
    GalleryMatrix g;
    g.name = GalleryName::Hilbert;
    g.n = n;
    g.exact = hilbert_exact(n);
    g.dense = to_double(*g.exact);
    g.chain = tn_expand(round_to_double(neville_bd(*g.exact)));
    finish(g);
    return g;
}

GalleryMatrix frank(std::size_t n) {
    if (n == 0) throw std::invalid_argument("frank: need n >= 1");
    GalleryMatrix g;
    g.name = GalleryName::Frank;
    g.n = n;
    ExactMatrix f(n, n, ExactScalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) f(i, i - 1) = ExactScalar(static_cast<long>(n - i));
        for (std::size_t j = i; j < n; ++j) f(i, j) = ExactScalar(static_cast<long>(n - j));
    }
    g.exact = std::move(f);
    g.dense = to_double(*g.exact);

    FactorChain<double> c;
    c.n = n;
    c.factors.push_back(ChainFactor<double>{toeplitz_bidiagonal(n, -1.0), true});
    std::vector<double> sub(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = static_cast<double>(n - 1 - i);
    c.factors.push_back(ChainFactor<double>{
        Bidiagonal<double>(Orientation::Lower, std::vector<double>(n, 1.0), std::move(sub)),
        false});
    g.chain = std::move(c);
    finish(g);
    return g;
}

GalleryMatrix minij(std::size_t n) {
    if (n == 0) throw std::invalid_argument("minij: need n >= 1");
    GalleryMatrix g;
    g.name = GalleryName::MinIJ;
    g.n = n;
    ExactMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = ExactScalar(static_cast<long>(std::min(i, j) + 1));
    g.exact = std::move(a);
    g.dense = to_double(*g.exact);

    FactorChain<double> c;
    c.n = n;
    c.factors.push_back(ChainFactor<double>{transpose(toeplitz_bidiagonal(n, -1.0)), true});
    c.factors.push_back(ChainFactor<double>{toeplitz_bidiagonal(n, -1.0), true});
    g.chain = std::move(c);
    finish(g);
    return g;
}

std::vector<double> minij_inverse_eigenvalues(std::size_t n) {
    if (n == 0) throw std::invalid_argument("minij: need n >= 1");
    std::vector<double> mu(n);
    const double pi = std::acos(-1.0);
    for (std::size_t k = 1; k <= n; ++k)
        mu[k - 1] = 2.0 * (1.0 + std::cos(2.0 * static_cast<double>(k) * pi /
                                          (2.0 * static_cast<double>(n) + 1.0)));
    return mu;
}

GalleryMatrix kms(std::size_t n, double rho) {
    if (n == 0) throw std::invalid_argument("kms: need n >= 1");
    GalleryMatrix g;
    g.name = GalleryName::KMS;
    g.n = n;
    g.parameters = {rho};

    ExactScalar r = to_exact(rho);
    ExactMatrix a(n, n);
    std::vector<ExactScalar> pow(n);
    pow[0] = 1;
    for (std::size_t k = 1; k < n; ++k) pow[k] = pow[k - 1] * r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = pow[i > j ? i - j : j - i];
    g.exact = std::move(a);
    g.dense = to_double(*g.exact);

    // L D L^T needs the pivots 1, 1-rho^2, ... positive
    if (std::abs(rho) < 1.0) {
        FactorChain<double> c;
        c.n = n;
        c.factors.push_back(ChainFactor<double>{transpose(toeplitz_bidiagonal(n, -rho)), true});
        std::vector<double> d(n, 1.0 - rho * rho);
        d[0] = 1.0;
        c.scale = DiagonalScale<double>{1, std::move(d)};
        c.factors.push_back(ChainFactor<double>{toeplitz_bidiagonal(n, -rho), true});
        g.chain = std::move(c);
    }
    finish(g);
    return g;
}

Bidiagonal<double> creation_bidiagonal(std::size_t n) {
    if (n == 0) throw std::invalid_argument("creation: need n >= 1");
    std::vector<double> off(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] = static_cast<double>(i + 1);
    return Bidiagonal<double>(Orientation::Upper, std::vector<double>(n, 0.0), std::move(off));
}

GalleryMatrix creation(std::size_t n) {
    GalleryMatrix g;
    g.name = GalleryName::Creation;
    g.n = n;
    Bidiagonal<double> c = creation_bidiagonal(n);
    g.dense = to_dense(c);
    g.exact = to_exact(*g.dense);
    g.chain = single_factor_chain(std::move(c));
    finish(g);
    return g;
}

FactorChain<double> gauss_seidel_iteration_matrix(const std::vector<double>& diag,
                                                  const std::vector<double>& sub,
                                                  const std::vector<double>& sup) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("gauss_seidel_iteration_matrix: need n >= 1");
    if (sub.size() + 1 != n || sup.size() + 1 != n)
        throw std::invalid_argument("gauss_seidel_iteration_matrix: off-diagonals need length n-1");
    for (double d : diag)
        if (!(d < 0.0))
            throw std::domain_error("gauss_seidel_iteration_matrix: diagonal must be negative");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (sub[i] < 0.0 || sup[i] < 0.0)
            throw std::domain_error(
                "gauss_seidel_iteration_matrix: off-diagonals must be nonnegative");

    std::vector<double> d0(n), s0(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d0[i] = -diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) s0[i] = -sub[i];

    FactorChain<double> b;
    b.n = n;
    b.factors.push_back(ChainFactor<double>{
        Bidiagonal<double>(Orientation::Lower, std::move(d0), std::move(s0)), true});
    b.factors.push_back(ChainFactor<double>{
        Bidiagonal<double>(Orientation::Upper, std::vector<double>(n, 0.0), sup), false});
    return b;
}

} // namespace bidiag
