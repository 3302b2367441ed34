#ifndef BIDIAG_CHAIN_HPP
#define BIDIAG_CHAIN_HPP

// A factor chain denotes the product
//     A = F_1 * F_2 * ... * F_k            (factors[0] is F_1, leftmost)
// where each F_i is a bidiagonal matrix or the inverse of one (inverted
// flag), with an optional positive diagonal scale D inserted after
// `scale.position` bidiagonal factors. The matrix A is never formed by the
// structured operations; it is only expanded on request.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

template <typename T>
struct ChainFactor {
    Bidiagonal<T> matrix;
    bool inverted = false;
};

template <typename T>
struct DiagonalScale {
    std::size_t position = 0; // number of bidiagonal factors to its left
    std::vector<T> diag;
};

template <typename T>
struct FactorChain {
    std::size_t n = 0;
    std::vector<ChainFactor<T>> factors;
    std::optional<DiagonalScale<T>> scale;
};

template <typename T>
void validate(const FactorChain<T>& c) {
    if (c.n == 0) throw std::invalid_argument("factor chain: need n >= 1");
    for (const auto& f : c.factors)
        if (f.matrix.n() != c.n) throw std::invalid_argument("factor chain: factor dimension mismatch");
    if (c.scale) {
        if (c.scale->diag.size() != c.n)
            throw std::invalid_argument("factor chain: scale dimension mismatch");
        if (c.scale->position > c.factors.size())
            throw std::out_of_range("factor chain: scale position out of range");
        for (const T& d : c.scale->diag)
            if (!(d > T(0))) throw std::invalid_argument("factor chain: scale entries must be positive");
    }
}

// y = A x, applying factors right to left; inverted factors cost one
// substitution each, direct ones one bidiagonal multiply.
template <typename T>
std::vector<T> multiply(const FactorChain<T>& c, std::vector<T> x) {
    validate(c);
    if (x.size() != c.n) throw std::invalid_argument("chain multiply: dimension mismatch");
    const std::size_t k = c.factors.size();
    for (std::size_t idx = k; idx-- > 0;) {
        if (c.scale && c.scale->position == idx + 1)
            for (std::size_t i = 0; i < c.n; ++i) x[i] = c.scale->diag[i] * x[i];
        x = c.factors[idx].inverted ? solve(c.factors[idx].matrix, x)
                                    : multiply(c.factors[idx].matrix, x);
    }
    if (c.scale && c.scale->position == 0)
        for (std::size_t i = 0; i < c.n; ++i) x[i] = c.scale->diag[i] * x[i];
    return x;
}

// Solve A x = b by processing factors left to right: substitution for direct
// factors, a bidiagonal multiply for inverted ones.
template <typename T>
std::vector<T> solve(const FactorChain<T>& c, std::vector<T> b) {
    validate(c);
    if (b.size() != c.n) throw std::invalid_argument("chain solve: dimension mismatch");
    for (std::size_t idx = 0; idx < c.factors.size(); ++idx) {
        if (c.scale && c.scale->position == idx)
            for (std::size_t i = 0; i < c.n; ++i) b[i] = b[i] / c.scale->diag[i];
        b = c.factors[idx].inverted ? multiply(c.factors[idx].matrix, b)
                                    : solve(c.factors[idx].matrix, b);
    }
    if (c.scale && c.scale->position == c.factors.size())
        for (std::size_t i = 0; i < c.n; ++i) b[i] = b[i] / c.scale->diag[i];
    return b;
}

// Expand the product to a dense matrix, O(k n^2). An empty chain is the
// identity. Inverted factors are expanded through substitution per column so
// exact scalar types stay exact.
template <typename T>
Matrix<T> dense(const FactorChain<T>& c) {
    validate(c);
    Matrix<T> m = Matrix<T>::identity(c.n);
    // build columns: m = F_1 * (F_2 * (... * I)), iterating factors from the right
    auto apply_factor = [&](const ChainFactor<T>& f) {
        for (std::size_t j = 0; j < c.n; ++j) {
            std::vector<T> col(c.n);
            for (std::size_t i = 0; i < c.n; ++i) col[i] = m(i, j);
            col = f.inverted ? solve(f.matrix, col) : multiply(f.matrix, col);
            for (std::size_t i = 0; i < c.n; ++i) m(i, j) = col[i];
        }
    };
    const std::size_t k = c.factors.size();
    auto apply_scale = [&]() {
        for (std::size_t i = 0; i < c.n; ++i)
            for (std::size_t j = 0; j < c.n; ++j) m(i, j) = c.scale->diag[i] * m(i, j);
    };
    for (std::size_t idx = k; idx-- > 0;) {
        if (c.scale && c.scale->position == idx + 1) apply_scale();
        apply_factor(c.factors[idx]);
    }
    if (c.scale && c.scale->position == 0) apply_scale();
    return m;
}

// Transpose reverses the factor order, transposes each factor and mirrors
// the scale position. Useful for 1-norm questions via the infinity norm.
template <typename T>
FactorChain<T> transpose(const FactorChain<T>& c) {
    FactorChain<T> t;
    t.n = c.n;
    t.factors.reserve(c.factors.size());
    for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it)
        t.factors.push_back(ChainFactor<T>{transpose(it->matrix), it->inverted});
    if (c.scale)
        t.scale = DiagonalScale<T>{c.factors.size() - c.scale->position, c.scale->diag};
    return t;
}

// Convenience: single-factor chain.
template <typename T>
FactorChain<T> single_factor_chain(Bidiagonal<T> b, bool inverted = false) {
    FactorChain<T> c;
    c.n = b.n();
    c.factors.push_back(ChainFactor<T>{std::move(b), inverted});
    return c;
}

} // namespace bidiag

#endif
