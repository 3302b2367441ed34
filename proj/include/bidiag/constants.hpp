#ifndef BIDIAG_CONSTANTS_HPP
#define BIDIAG_CONSTANTS_HPP

// Rounding-analysis constants. With unit roundoff u,
//   gamma_m = m*u / (1 - m*u)          (valid while m*u < 1)
// and the bidiagonal inversion constant for dimension n at perturbation
// level delta,
//   tau(n, delta) = (2n-1)*delta / (1 - (2n-1)*delta),
// which bounds the componentwise relative change of the inverse under
// entrywise relative perturbations of size delta: the (i,j) entry of the
// inverse is a quotient of at most 2n-1 perturbed entries and nothing else.

#include <limits>
#include <stdexcept>

namespace bidiag {

inline constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

template <typename T>
T gamma_constant(std::size_t m, const T& u) {
    T mu = T(static_cast<unsigned>(m)) * u;
    if (!(mu < T(1))) throw std::domain_error("gamma_constant: need m*u < 1");
    return mu / (T(1) - mu);
}

template <typename T>
T tau_constant(std::size_t n, const T& delta) {
    if (n == 0) throw std::invalid_argument("tau_constant: need n >= 1");
    if (delta < T(0)) throw std::domain_error("tau_constant: need delta >= 0");
    return gamma_constant(2 * n - 1, delta);
}

struct PerturbationConstants {
    double delta = 0;   // componentwise relative perturbation level
    std::size_t n = 0;  // matrix dimension
    double tau = 0;     // tau(n, delta)
    double gamma_m = 0; // gamma_m at the same delta, default m = 2

    PerturbationConstants(std::size_t n_, double delta_, std::size_t m = 2)
        : delta(delta_), n(n_), tau(tau_constant(n_, delta_)),
          gamma_m(gamma_constant(m, delta_)) {}
};

} // namespace bidiag

#endif
