#ifndef BIDIAG_BIDIAGONAL_HPP
#define BIDIAG_BIDIAGONAL_HPP

// Bidiagonal matrices stored as diagonal + one off-diagonal. The inverse of
// a bidiagonal matrix has an explicit product form free of additions, which
// is what makes chains of these factors attractive: no cancellation happens
// anywhere in inversion, norm evaluation or substitution.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidiag/errors.hpp"
#include "bidiag/matrix.hpp"

namespace bidiag {

enum class Orientation { Upper, Lower };

// Nonnegative: all entries >= 0.
// Checkerboard: A = +/- S|A|S with S = diag(1,-1,1,...); zero entries wild.
// General: anything else.
enum class SignClass { Nonnegative, Checkerboard, General };

template <typename T>
struct Bidiagonal {
    Orientation orientation = Orientation::Upper;
    std::vector<T> diag; // length n
    std::vector<T> off;  // length n-1, superdiagonal (Upper) or subdiagonal (Lower)

    Bidiagonal() = default;
    Bidiagonal(Orientation o, std::vector<T> d, std::vector<T> f)
        : orientation(o), diag(std::move(d)), off(std::move(f)) {
        if (diag.empty()) throw std::invalid_argument("bidiagonal: need n >= 1");
        if (off.size() + 1 != diag.size())
            throw std::invalid_argument("bidiagonal: off-diagonal must have length n-1");
    }

    std::size_t n() const { return diag.size(); }
};

// Upper bidiagonal with unit diagonal and constant superdiagonal theta.
template <typename T>
Bidiagonal<T> toeplitz_bidiagonal(std::size_t n, const T& theta) {
    if (n == 0) throw std::invalid_argument("toeplitz_bidiagonal: need n >= 1");
    return Bidiagonal<T>(Orientation::Upper, std::vector<T>(n, T(1)),
                         std::vector<T>(n - 1, theta));
}

// Unit lower bidiagonal whose only nonzero subdiagonal entry is at row k+1
// (1-based), i.e. position (k+1, k).
template <typename T>
Bidiagonal<T> elementary_lower(std::size_t n, std::size_t k, const T& value) {
    if (n == 0) throw std::invalid_argument("elementary_lower: need n >= 1");
    if (k < 1 || k > n - 1) throw std::out_of_range("elementary_lower: need 1 <= k <= n-1");
    std::vector<T> off(n - 1, T(0));
    off[k - 1] = value;
    return Bidiagonal<T>(Orientation::Lower, std::vector<T>(n, T(1)), std::move(off));
}

template <typename T>
Bidiagonal<T> transpose(const Bidiagonal<T>& b) {
    Bidiagonal<T> t = b;
    t.orientation = (b.orientation == Orientation::Upper) ? Orientation::Lower : Orientation::Upper;
    return t;
}

template <typename T>
Matrix<T> to_dense(const Bidiagonal<T>& b) {
    const std::size_t n = b.n();
    Matrix<T> m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = b.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (b.orientation == Orientation::Upper)
            m(i, i + 1) = b.off[i];
        else
            m(i + 1, i) = b.off[i];
    }
    return m;
}

template <typename T>
Bidiagonal<T> abs(const Bidiagonal<T>& b) {
    Bidiagonal<T> a = b;
    for (auto& d : a.diag) d = detail::generic_abs(d);
    for (auto& f : a.off) f = detail::generic_abs(f);
    return a;
}

// Same sparsity, |diagonal| on the diagonal, -|off| off the diagonal.
template <typename T>
Bidiagonal<T> comparison_matrix(const Bidiagonal<T>& b) {
    Bidiagonal<T> m = b;
    for (auto& d : m.diag) d = detail::generic_abs(d);
    for (auto& f : m.off) f = -detail::generic_abs(f);
    return m;
}

namespace detail {

// tri-state sign set: which signs occur among nonzero entries
struct SignSeen {
    bool pos = false, neg = false;
    template <typename T>
    void note(const T& x) {
        if (x > T(0)) pos = true;
        else if (x < T(0)) neg = true;
    }
};

} // namespace detail

// A bidiagonal matrix is checkerboard iff its nonzero diagonal entries share
// one sign s and its nonzero off-diagonal entries all have sign -s (diagonal
// positions carry (+) parity, off-diagonal positions (-) parity).
template <typename T>
bool is_checkerboard(const Bidiagonal<T>& b) {
    detail::SignSeen d, f;
    for (const T& x : b.diag) d.note(x);
    for (const T& x : b.off) f.note(x);
    if (d.pos && d.neg) return false;
    if (f.pos && f.neg) return false;
    if (d.pos && f.pos) return false;
    if (d.neg && f.neg) return false;
    return true;
}

template <typename T>
SignClass classify_sign(const Bidiagonal<T>& b) {
    bool nonneg = true;
    for (const T& x : b.diag)
        if (x < T(0)) { nonneg = false; break; }
    if (nonneg)
        for (const T& x : b.off)
            if (x < T(0)) { nonneg = false; break; }
    if (nonneg) return SignClass::Nonnegative;
    if (is_checkerboard(b)) return SignClass::Checkerboard;
    return SignClass::General;
}

// Dense variant: sign(a_ij) must lie in {0, s*(-1)^(i+j)} for one global s.
template <typename T>
SignClass classify_sign(const Matrix<T>& a) {
    bool nonneg = true;
    for (std::size_t i = 0; i < a.rows() && nonneg; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) < T(0)) { nonneg = false; break; }
    if (nonneg) return SignClass::Nonnegative;

    detail::SignSeen even, odd; // parity of i+j among nonzero entries
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if ((i + j) % 2 == 0) even.note(a(i, j));
            else odd.note(a(i, j));
        }
    bool ok = !(even.pos && even.neg) && !(odd.pos && odd.neg) &&
              !(even.pos && odd.pos) && !(even.neg && odd.neg);
    return ok ? SignClass::Checkerboard : SignClass::General;
}

// Entry (i, j), zero-based, of the inverse. For an upper factor and j >= i:
//   inv(i,j) = (1/diag[j]) * prod_{k=i..j-1} (-off[k] / diag[k]),
// the mirrored product for a lower factor. Entries outside the triangle are 0.
template <typename T>
T inverse_entry(const Bidiagonal<T>& b, std::size_t i, std::size_t j) {
    const std::size_t n = b.n();
    if (i >= n || j >= n) throw std::out_of_range("inverse_entry: index out of range");
    if (b.orientation == Orientation::Lower) return inverse_entry(transpose(b), j, i);
    if (j < i) return T(0);
    if (b.diag[j] == T(0)) throw singular_error("inverse_entry: zero diagonal entry");
    T v = T(1) / b.diag[j];
    for (std::size_t k = i; k < j; ++k) {
        if (b.diag[k] == T(0)) throw singular_error("inverse_entry: zero diagonal entry");
        v *= -b.off[k] / b.diag[k];
    }
    return v;
}

// Full inverse in O(n^2) by running the entry products along each row.
template <typename T>
Matrix<T> inverse_dense(const Bidiagonal<T>& b) {
    if (b.orientation == Orientation::Lower) return transpose(inverse_dense(transpose(b)));
    const std::size_t n = b.n();
    for (std::size_t i = 0; i < n; ++i)
        if (b.diag[i] == T(0)) throw singular_error("inverse_dense: zero diagonal entry");
    Matrix<T> inv(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        T v = T(1) / b.diag[i];
        inv(i, i) = v;
        // moving right one column multiplies by -off[j-1]/diag[j]
        for (std::size_t j = i + 1; j < n; ++j) {
            v *= -b.off[j - 1] / b.diag[j];
            inv(i, j) = v;
        }
    }
    return inv;
}

template <typename T>
std::vector<T> multiply(const Bidiagonal<T>& b, const std::vector<T>& x) {
    const std::size_t n = b.n();
    if (x.size() != n) throw std::invalid_argument("bidiagonal multiply: dimension mismatch");
    std::vector<T> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        T v = b.diag[i] * x[i];
        if (b.orientation == Orientation::Upper) {
            if (i + 1 < n) v += b.off[i] * x[i + 1];
        } else {
            if (i > 0) v += b.off[i - 1] * x[i - 1];
        }
        y[i] = v;
    }
    return y;
}

// One substitution sweep. Two flops per unknown, so the computed solution of
// B x = r carries a componentwise relative backward error of at most gamma_2.
template <typename T>
std::vector<T> solve(const Bidiagonal<T>& b, const std::vector<T>& rhs) {
    const std::size_t n = b.n();
    if (rhs.size() != n) throw std::invalid_argument("bidiagonal solve: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (b.diag[i] == T(0)) throw singular_error("bidiagonal solve: zero diagonal entry");
    std::vector<T> x(n);
    if (b.orientation == Orientation::Upper) {
        x[n - 1] = rhs[n - 1] / b.diag[n - 1];
        for (std::size_t ip = n - 1; ip-- > 0;)
            x[ip] = (rhs[ip] - b.off[ip] * x[ip + 1]) / b.diag[ip];
    } else {
        x[0] = rhs[0] / b.diag[0];
        for (std::size_t i = 1; i < n; ++i)
            x[i] = (rhs[i] - b.off[i - 1] * x[i - 1]) / b.diag[i];
    }
    return x;
}

} // namespace bidiag

#endif
