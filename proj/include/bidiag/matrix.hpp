#ifndef BIDIAG_MATRIX_HPP
#define BIDIAG_MATRIX_HPP

// Small dense row-major matrix used for expanded products, oracle results
// and test fixtures. Everything at desk scale; no attempt at blocking.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bidiag {

namespace detail {
// abs that picks up boost::multiprecision via ADL and std::abs for builtins.
template <typename T>
T generic_abs(const T& x) {
    using std::abs;
    return abs(x);
}
} // namespace detail

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix<T> c(a.rows(), b.cols(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimensions differ");
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

template <typename T>
Matrix<T> abs(const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = detail::generic_abs(a(i, j));
    return r;
}

template <typename T>
std::vector<T> abs(const std::vector<T>& x) {
    std::vector<T> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = detail::generic_abs(x[i]);
    return r;
}

// Max absolute row sum.
template <typename T>
T inf_norm(const Matrix<T>& a) {
    T best(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T s(0);
        for (std::size_t j = 0; j < a.cols(); ++j) s += detail::generic_abs(a(i, j));
        if (s > best) best = s;
    }
    return best;
}

template <typename T>
T inf_norm(const std::vector<T>& x) {
    T best(0);
    for (const T& v : x) {
        T a = detail::generic_abs(v);
        if (a > best) best = a;
    }
    return best;
}

} // namespace bidiag

#endif
