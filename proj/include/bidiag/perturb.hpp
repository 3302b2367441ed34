#ifndef BIDIAG_PERTURB_HPP
#define BIDIAG_PERTURB_HPP

// Componentwise relative perturbations for the property tests: every entry
// moves to b*(1+f) with |f| <= delta, zeros stay zero. The containment
// |b' - b| <= delta*|b| is enforced exactly (checked in rational arithmetic,
// nudging by ulps when the final rounding lands outside), so perturbation
// theorems can be tested against it with zero tolerance.

#include <cmath>
#include <random>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

namespace detail {

inline double perturbed_entry(double b, double delta, std::mt19937_64& rng) {
    if (b == 0.0 || delta == 0.0) return b;
    std::uniform_real_distribution<double> dist(-delta, delta);
    double v = b * (1.0 + dist(rng));
    const ExactScalar eb = to_exact(b);
    const ExactScalar bound = to_exact(delta) * boost::multiprecision::abs(eb);
    while (boost::multiprecision::abs(to_exact(v) - eb) > bound) v = std::nextafter(v, b);
    return v;
}

} // namespace detail

inline Bidiagonal<double> perturb_componentwise(const Bidiagonal<double>& b, double delta,
                                                std::mt19937_64& rng) {
    if (delta < 0.0) throw std::invalid_argument("perturb_componentwise: delta must be >= 0");
    Bidiagonal<double> p = b;
    for (auto& d : p.diag) d = detail::perturbed_entry(d, delta, rng);
    for (auto& f : p.off) f = detail::perturbed_entry(f, delta, rng);
    return p;
}

} // namespace bidiag

#endif
