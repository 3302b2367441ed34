#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/condnum.hpp"
#include "bidiag/constants.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/oracle.hpp"
#include "bidiag/rational.hpp"
#include "bidiag/solve.hpp"

#include "generators.hpp"

using namespace bidiag;

namespace {

ExactScalar exact_gamma(std::size_t m) {
    return gamma_constant<ExactScalar>(m, to_exact(unit_roundoff));
}

ExactScalar exact_tau(std::size_t n) { return tau_constant<ExactScalar>(n, exact_gamma(2)); }

// Product over stages of (1 + c_i) minus one, in rationals; mirrors the
// double-precision coefficient in the budgets.
ExactScalar exact_coefficient(const FactorChain<double>& c, bool residual_style) {
    ExactScalar p(1);
    for (const auto& f : c.factors) {
        bool tau_stage = residual_style ? f.inverted : !f.inverted;
        p *= 1 + (tau_stage ? exact_tau(c.n) : exact_gamma(2));
    }
    if (c.scale) p *= 1 + exact_gamma(1);
    return p - 1;
}

ExactMatrix pascal_exact(std::size_t n) {
    ExactMatrix p(n, n, ExactScalar(1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) p(i, j) = p(i - 1, j) + p(i, j - 1);
    return p;
}

std::vector<ExactScalar> exact_abs(const std::vector<ExactScalar>& v) {
    std::vector<ExactScalar> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = abs(v[i]);
    return r;
}

void check_entrywise_bound(const std::vector<ExactScalar>& err, const ExactScalar& coeff,
                           const std::vector<ExactScalar>& env) {
    for (std::size_t i = 0; i < err.size(); ++i) CHECK(abs(err[i]) <= coeff * env[i]);
}

std::vector<ExactScalar> vec_sub(const std::vector<ExactScalar>& a,
                                 const std::vector<ExactScalar>& b) {
    std::vector<ExactScalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

double exact_rel_err_inf(const std::vector<double>& got, const std::vector<ExactScalar>& want) {
    ExactScalar num(0), den(0);
    for (std::size_t i = 0; i < got.size(); ++i) {
        ExactScalar e = abs(ExactScalar(to_exact(got[i]) - want[i]));
        ExactScalar w = abs(want[i]);
        if (e > num) num = e;
        if (w > den) den = w;
    }
    return to_double(num / den);
}

} // namespace

TEST_SUITE("solve") {

TEST_CASE("vandermonde inverse chain") {
    auto c2 = vandermonde_inverse_chain(std::vector<double>{0.0, 1.0});
    CHECK(c2.factors.size() == 2);
    Matrix<double> want(2, 2, 0.0);
    want(0, 0) = 1.0; want(0, 1) = -1.0; want(1, 1) = 1.0;
    CHECK(dense(c2) == want);

    CHECK(vandermonde_inverse_chain(std::vector<double>{2.0}).factors.empty());
    CHECK_THROWS_AS(vandermonde_inverse_chain(std::vector<double>{1.0, 2.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(vandermonde_inverse_chain(std::vector<double>{}), std::invalid_argument);

    // exact identity gate: chain_dense * V = I in rational arithmetic
    std::vector<ExactScalar> pts{ExactScalar(0), ExactScalar(1), ExactScalar(2), ExactScalar(3)};
    auto ec = vandermonde_inverse_chain(pts);
    ExactMatrix v(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            ExactScalar p(1);
            for (std::size_t r = 0; r < i; ++r) p *= pts[j];
            v(i, j) = p;
        }
    CHECK(multiply(exact_chain_dense(ec), v) == ExactMatrix::identity(4));

    // increasing nonnegative points: every factor fits the checkerboard
    // pattern, so the componentwise budgets are tight for these chains
    auto cc = vandermonde_inverse_chain(std::vector<double>{0.0, 0.5, 1.25, 3.0});
    for (const auto& f : cc.factors) CHECK(classify_sign(f.matrix) != SignClass::General);
    CHECK(chain_has_identity_pattern(cc));
    // with strictly positive points the label is unambiguous
    auto cp = vandermonde_inverse_chain(std::vector<double>{0.5, 1.0, 2.0});
    for (const auto& f : cp.factors) CHECK(classify_sign(f.matrix) == SignClass::Checkerboard);
    CHECK(chain_has_identity_pattern(cp));

    // random distinct points, exact identity
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<long> num(-12, 12);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        std::vector<ExactScalar> p;
        while (p.size() < n) {
            ExactScalar c = ExactScalar(num(rng)) / 4;
            bool dup = false;
            for (const auto& q : p) dup = dup || q == c;
            if (!dup) p.push_back(c);
        }
        ExactMatrix vv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExactScalar pw(1);
                for (std::size_t r = 0; r < i; ++r) pw *= p[j];
                vv(i, j) = pw;
            }
        CHECK(multiply(exact_chain_dense(vandermonde_inverse_chain(p)), vv) ==
              ExactMatrix::identity(n));
    }
}

TEST_CASE("bjorck-pereyra solve") {
    CHECK(bp_solve({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}) == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(bp_solve({0.0, 1.0}, {0.0, 1.0}) == std::vector<double>{-1.0, 1.0});
    CHECK_THROWS_AS(bp_solve({1.0, 1.0}, {1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(bp_solve({1.0, 2.0}, {1.0}), std::invalid_argument);

    // componentwise recovery: increasing integer points, alternating-sign b,
    // error within (1+gamma_2)^(2n-2) - 1 of the chain's own exact action
    for (std::size_t n : {3ul, 5ul, 8ul}) {
        std::vector<double> pts(n);
        for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<double>(i);
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = (i % 2 ? -1.0 : 1.0) * (1.0 + static_cast<double>(i) / 7.0);

        auto yhat = bp_solve(pts, b);
        auto ec = to_exact(vandermonde_inverse_chain(pts));
        auto y = multiply(ec, to_exact(b));

        ExactScalar coeff = ExactScalar(1);
        for (std::size_t i = 0; i < 2 * n - 2; ++i) coeff *= 1 + exact_gamma(2);
        coeff -= 1;
        // alternating signs: no cancellation anywhere, so |y| is the envelope
        CHECK(chain_abs_apply(ec, exact_abs(to_exact(b))) == exact_abs(y));
        check_entrywise_bound(vec_sub(to_exact(yhat), y), coeff, exact_abs(y));
    }
}

TEST_CASE("product-chain solve and its budgets") {
    // identity chain
    FactorChain<double> ident;
    ident.n = 3;
    ident.factors.push_back(ChainFactor<double>{
        Bidiagonal<double>(Orientation::Upper, {1.0, 1.0, 1.0}, {0.0, 0.0}), false});
    std::vector<double> b{0.3, -1.5, 2.0};
    auto ri = solve_product_chain(ident, b);
    CHECK(ri.x == b);
    CHECK(ri.residual.kind == BudgetKind::ResidualBound);
    CHECK(ri.forward.kind == BudgetKind::ForwardBoundCoefficient);
    CHECK(ri.residual.tight);
    CHECK(ri.residual.coefficient > 0.0);
    CHECK(ri.residual.envelope == abs(b));

    // singular factor
    FactorChain<double> sing = single_factor_chain(
        Bidiagonal<double>(Orientation::Upper, {1.0, 0.0}, {1.0}));
    CHECK_THROWS_AS(solve_product_chain(sing, std::vector<double>{1.0, 1.0}), singular_error);

    // mixed-pattern chain still solves, but the budgets drop the tight flag
    FactorChain<double> mixed;
    mixed.n = 3;
    mixed.factors.push_back(ChainFactor<double>{toeplitz_bidiagonal(3, 1.0), false});
    mixed.factors.push_back(ChainFactor<double>{toeplitz_bidiagonal(3, -1.0), false});
    auto rm = solve_product_chain(mixed, b);
    CHECK(!rm.residual.tight);
    CHECK(!rm.forward.tight);

    // exact verification of both bounds, mixed direct/inverted chains
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        std::size_t k = 1 + static_cast<std::size_t>(trial % (2 * n));
        auto pat = trial % 2 ? testgen::Pattern::Nonnegative : testgen::Pattern::Checkerboard;
        auto c = testgen::random_mixed_chain(n, k, pat, rng, trial % 3 == 0);
        auto rhs = testgen::random_vector(n, rng);

        auto res = solve_product_chain(c, rhs);
        CHECK(res.residual.tight);

        auto ec = to_exact(c);
        ExactMatrix a = exact_chain_dense(ec);
        auto xe = to_exact(res.x);
        auto be = to_exact(rhs);

        // residual: |b - A xhat| <= coeff * (|F_1|...|F_k| |xhat|)
        check_entrywise_bound(vec_sub(be, multiply(a, xe)),
                              exact_coefficient(c, true),
                              chain_abs_apply(ec, exact_abs(xe)));

        // forward: |x - xhat| <= coeff * (|F_k^{-1}|...|F_1^{-1}| |b|)
        check_entrywise_bound(vec_sub(xe, exact_solve(a, be)),
                              exact_coefficient(c, false),
                              chain_inv_abs_apply(ec, exact_abs(be)));
    }
}

TEST_CASE("inverse-chain solve and its budgets") {
    // single identity factor
    FactorChain<double> ident;
    ident.n = 2;
    ident.factors.push_back(ChainFactor<double>{
        Bidiagonal<double>(Orientation::Upper, {1.0, 1.0}, {0.0}), false});
    std::vector<double> b{2.0, -3.0};
    auto ri = solve_inverse_chain(ident, b);
    CHECK(ri.x == b);
    CHECK(ri.forward.kind == BudgetKind::InverseChainForward);
    CHECK(ri.residual.kind == BudgetKind::InverseChainResidual);

    // Vandermonde: recover y from b = V y exactly representable
    std::vector<double> pts{0.0, 1.0, 2.0, 3.0};
    std::vector<double> y{1.0, 0.0, 0.0, 0.0}; // b = first column of V... V e_1
    ExactMatrix v(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            ExactScalar p(1);
            for (std::size_t r = 0; r < i; ++r) p *= to_exact(pts[j]);
            v(i, j) = p;
        }
    auto bv = to_double(multiply(v, to_exact(y)));
    auto chain = vandermonde_inverse_chain(pts);
    auto rv = solve_inverse_chain(chain, bv);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(rv.x[i] - y[i]) <= rv.forward.coefficient *
                                              rv.forward.envelope[i] * (1 + 1e-8) + 1e-300);

    // exact verification of both bounds
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        std::size_t k = 1 + static_cast<std::size_t>(trial % (2 * n));
        auto pat = trial % 2 ? testgen::Pattern::Nonnegative : testgen::Pattern::Checkerboard;
        auto c = testgen::random_mixed_chain(n, k, pat, rng, trial % 4 == 0);
        auto rhs = testgen::random_vector(n, rng);

        auto res = solve_inverse_chain(c, rhs);
        auto ec = to_exact(c);
        ExactMatrix ainv = exact_chain_dense(ec);
        auto xe = to_exact(res.x);
        auto be = to_exact(rhs);

        // forward: |xhat - A^{-1} b| <= coeff * (|F_1|...|F_k| |b|)
        check_entrywise_bound(vec_sub(xe, multiply(ainv, be)),
                              exact_coefficient(c, true),
                              chain_abs_apply(ec, exact_abs(be)));

        // residual: |b - A xhat| <= coeff * (|F_k^{-1}|...|F_1^{-1}| |xhat|)
        ExactMatrix a = exact_inverse(ainv);
        check_entrywise_bound(vec_sub(be, multiply(a, xe)),
                              exact_coefficient(c, false),
                              chain_inv_abs_apply(ec, exact_abs(xe)));
    }
}

TEST_CASE("dense LU baseline") {
    CHECK(dense_lu_solve(Matrix<double>::identity(3), {1.0, 2.0, 3.0}) ==
          std::vector<double>{1.0, 2.0, 3.0});

    // pivoting path
    Matrix<double> p(2, 2, 0.0);
    p(0, 1) = 1.0;
    p(1, 0) = 2.0;
    CHECK(dense_lu_solve(p, {3.0, 4.0}) == std::vector<double>{2.0, 3.0});

    Matrix<double> s(2, 2, 1.0);
    CHECK_THROWS_AS(dense_lu_solve(s, {1.0, 1.0}), singular_error);

    // well-conditioned random system: error below 1e-12
    std::mt19937_64 rng(137);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix<double> a(10, 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) a(i, j) = d(rng) + (i == j ? 20.0 : 0.0);
    auto b10 = testgen::random_vector(10, rng);
    auto x10 = dense_lu_solve(a, b10);
    auto xe = exact_solve(to_exact(a), to_exact(b10));
    CHECK(exact_rel_err_inf(x10, xe) <= 1e-12);
}

TEST_CASE("pascal solve: factored substitution versus dense LU") {
    for (std::size_t n : {10ul, 15ul}) {
        TNFactorization<double> ones(Matrix<double>(n, n, 1.0));
        auto chain = tn_expand(ones);
        std::vector<double> b(n, 0.0);
        b[n - 1] = 1.0 / static_cast<double>(n);

        auto res = solve_product_chain(chain, b);
        ExactMatrix p = pascal_exact(n);
        auto x = exact_solve(p, to_exact(b));
        double err_bidiag = exact_rel_err_inf(res.x, x);
        double err_lu = exact_rel_err_inf(dense_lu_solve(to_double(p), b), x);

        CHECK(err_bidiag <= 5e-16);
        CHECK(err_lu >= 10.0 * err_bidiag);
        if (n == 15) {
            CHECK(err_lu >= 1e-8);
            CHECK(err_lu <= 1e-1);
        }

        // the budget covers the achieved error
        double bound = res.forward.coefficient * inf_norm(res.forward.envelope) /
                       to_double(inf_norm(x));
        CHECK(err_bidiag <= bound * (1 + 1e-8));
    }
}

} // TEST_SUITE
