#include "bidiag/svals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bidiag {

SymTridiagonal::SymTridiagonal(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), off(std::move(e)) {
    if (diag.empty()) throw std::invalid_argument("SymTridiagonal: empty diagonal");
    if (off.size() + 1 != diag.size())
        throw std::invalid_argument("SymTridiagonal: off length must be size - 1");
}

SymTridiagonal golub_kahan_tridiagonal(const Bidiagonal<double>& b) {
    if (b.orientation == Orientation::Lower) return golub_kahan_tridiagonal(transpose(b));
    const std::size_t n = b.diag.size();
    std::vector<double> off(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        off[2 * i] = b.diag[i];
        if (i + 1 < n) off[2 * i + 1] = b.off[i];
    }
    return SymTridiagonal(std::vector<double>(2 * n, 0.0), std::move(off));
}

std::size_t sturm_count_below(const SymTridiagonal& t, double x) {
    const double machep = std::numeric_limits<double>::epsilon();
    std::size_t count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        double v = 0.0;
        if (i > 0) v = (d != 0.0) ? t.off[i - 1] * t.off[i - 1] / d
                                  : std::abs(t.off[i - 1]) / machep;
        d = (t.diag[i] - x) - v;
        if (d < 0.0) ++count;
    }
    return count;
}

double eigenvalue_by_index(const SymTridiagonal& t, std::size_t k, double tol) {
    if (k >= t.size()) throw std::invalid_argument("eigenvalue_by_index: index out of range");
    if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue_by_index: tol must be positive");

    double lo = t.diag[0], hi = t.diag[0];
    for (std::size_t i = 0; i < t.size(); ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off[i - 1]);
        if (i + 1 < t.size()) r += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }

    const double width = 0.25 * tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    // invariant: count(lo) <= k < count(hi)
    while (hi - lo > width) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break; // interval at rounding resolution
        if (sturm_count_below(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return lo + 0.5 * (hi - lo);
}

std::vector<double> singular_values(const Bidiagonal<double>& b, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("singular_values: tol must be positive");
    const std::size_t n = b.diag.size();
    SymTridiagonal t = golub_kahan_tridiagonal(b);
    // eigenvalues come in +/- pairs; indices n..2n-1 are the nonnegative half
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = eigenvalue_by_index(t, 2 * n - 1 - i, tol);
        sigma[i] = std::max(s, 0.0); // clamp bisection noise around zero
    }
    return sigma;
}

double sval_perturbation_mu(const std::vector<double>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("sval_perturbation_mu: empty input");
    double mu = 1.0;
    for (double a : alphas) {
        if (a == 0.0) throw std::domain_error("sval_perturbation_mu: zero scaling factor");
        double m = std::abs(a);
        mu *= std::max(m, 1.0 / m);
    }
    return mu;
}

ProductSvalCounterexample product_sval_counterexample(double x, double delta) {
    if (!(x > 0.0)) throw std::domain_error("product_sval_counterexample: need x > 0");
    if (delta < 0.0) throw std::domain_error("product_sval_counterexample: need delta >= 0");
    // delta = 0 is the unperturbed sanity case; otherwise stay in the regime
    // where the effect is dramatic
    if (delta > 0.0 && x * delta < 10.0)
        throw std::domain_error("product_sval_counterexample: need x*delta >= 10");

    ProductSvalCounterexample r;
    r.x = x;
    r.delta = delta;
    r.t = 2.0 * x * delta;

    Bidiagonal<double> perturbed(Orientation::Upper, {1.0, 1.0}, {r.t});
    auto sigma = singular_values(perturbed);
    r.sigma1 = sigma[0];
    r.sigma2 = sigma[1];

    double root = std::sqrt(r.t * r.t + 4.0);
    r.sigma1_closed = 0.5 * (r.t + root);
    r.sigma2_closed = 2.0 / (r.t + root); // 1/sigma1, the determinant is 1

    r.rel_change_sigma1 = r.sigma1_closed - 1.0;
    r.rel_change_sigma2 = 1.0 - r.sigma2_closed;
    return r;
}

} // namespace bidiag
