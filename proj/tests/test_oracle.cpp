#include <doctest.h>

#include <random>
#include <vector>

#include "bidiag/bidiagonal.hpp"
#include "bidiag/chain.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/oracle.hpp"
#include "bidiag/rational.hpp"

#include "generators.hpp"

using namespace bidiag;

namespace {

ExactMatrix hilbert_exact(std::size_t n) {
    ExactMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = ExactScalar(1) / ExactScalar(static_cast<unsigned>(i + j + 1));
    return h;
}

ExactMatrix pascal_exact(std::size_t n) {
    ExactMatrix p(n, n, ExactScalar(1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) p(i, j) = p(i - 1, j) + p(i, j - 1);
    return p;
}

ExactScalar rat(long num, long den) { return ExactScalar(num) / ExactScalar(den); }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("scalar conversions are exact") {
    CHECK(to_double(to_exact(0.1)) == 0.1);
    CHECK(to_double(to_exact(-3.25)) == -3.25);
    CHECK(to_exact(0.5) == rat(1, 2));
    CHECK(to_fraction_string(rat(3, 4)) == "3/4");
    CHECK(to_fraction_string(ExactScalar(-7)) == "-7");
    CHECK(ExactScalar("3/4") == rat(3, 4));
    CHECK_THROWS(to_exact(std::numeric_limits<double>::infinity()));
}

TEST_CASE("rational interval arithmetic") {
    RationalInterval a(rat(1, 2), rat(3, 4));
    RationalInterval b(rat(-1, 3), rat(1, 5));
    CHECK((a + b).lo == rat(1, 6));
    CHECK((a + b).hi == rat(19, 20));
    CHECK((a - a).contains_zero());
    CHECK(!(a * a).contains_zero());
    CHECK((a * b).lo == rat(-1, 4));   // 3/4 * -1/3
    CHECK((a * b).hi == rat(3, 20));   // 3/4 * 1/5
    CHECK((a / a).lo <= ExactScalar(1));
    CHECK((a / a).hi >= ExactScalar(1));
    CHECK_THROWS_AS(a / b, enclosure_error);

    RationalInterval exact_one{ExactScalar(1)};
    CHECK(exact_one.exact());

    RationalInterval widened = round_outward(a, 8);
    CHECK(widened.lo <= a.lo);
    CHECK(widened.hi >= a.hi);
}

TEST_CASE("exponential enclosures are tight and correct") {
    CHECK(exp_enclosure(ExactScalar(0)).exact());
    CHECK(exp_enclosure(ExactScalar(0)).lo == ExactScalar(1));

    RationalInterval e1 = exp_enclosure(ExactScalar(1));
    // 30-digit brackets of e
    ExactScalar lo("2718281828459045235360287471352/1000000000000000000000000000000");
    ExactScalar hi("2718281828459045235360287471353/1000000000000000000000000000000");
    CHECK(e1.lo > lo - rat(1, 1000000));
    CHECK(e1.lo <= hi);
    CHECK(e1.hi >= lo);
    CHECK(e1.hi - e1.lo < ExactScalar("1/1000000000000000000000000000000000000"));
    // the enclosure is genuinely two-sided around the 30-digit value
    CHECK(e1.lo < hi);
    CHECK(e1.hi > lo);

    RationalInterval e8 = exp_enclosure(ExactScalar(8));
    CHECK(e8.lo > ExactScalar(2980));
    CHECK(e8.hi < ExactScalar(2981));
    CHECK_THROWS(exp_enclosure(ExactScalar(9)));
    CHECK_THROWS(exp_enclosure(ExactScalar(-1)));
}

TEST_CASE("exact determinant") {
    CHECK(exact_determinant(ExactMatrix::identity(4)) == ExactScalar(1));

    ExactMatrix sing(3, 3, ExactScalar(1)); // rank one
    CHECK(exact_determinant(sing) == ExactScalar(0));

    ExactMatrix swap2(2, 2, ExactScalar(0));
    swap2(0, 1) = 1;
    swap2(1, 0) = 1;
    CHECK(exact_determinant(swap2) == ExactScalar(-1));

    ExactMatrix m(3, 3);
    m(0, 0) = rat(1, 2); m(0, 1) = rat(1, 3); m(0, 2) = 1;
    m(1, 0) = 2;         m(1, 1) = rat(3, 4); m(1, 2) = 0;
    m(2, 0) = -1;        m(2, 1) = 5;         m(2, 2) = rat(1, 6);
    // expansion by hand: det = 1/2*(3/4*1/6 - 0*5) - 1/3*(2*1/6 - 0*(-1)) + 1*(2*5 - 3/4*(-1))
    ExactScalar want = rat(1, 2) * rat(1, 8) - rat(1, 3) * rat(1, 3) + (ExactScalar(10) + rat(3, 4));
    CHECK(exact_determinant(m) == want);
}

TEST_CASE("exact inverse, solve, condition number") {
    CHECK(exact_inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));

    ExactMatrix h2inv = exact_inverse(hilbert_exact(2));
    CHECK(h2inv(0, 0) == ExactScalar(4));
    CHECK(h2inv(0, 1) == ExactScalar(-6));
    CHECK(h2inv(1, 0) == ExactScalar(-6));
    CHECK(h2inv(1, 1) == ExactScalar(12));

    auto t3 = to_exact(toeplitz_bidiagonal(3, -1.0));
    ExactMatrix t3inv = exact_inverse(to_dense(t3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(t3inv(i, j) == (j >= i ? ExactScalar(1) : ExactScalar(0)));

    ExactMatrix sing(2, 2, ExactScalar(1));
    CHECK_THROWS_AS(exact_inverse(sing), singular_error);

    CHECK(exact_condition_inf(hilbert_exact(2)) == ExactScalar(27));
    CHECK(exact_condition_inf(ExactMatrix::identity(5)) == ExactScalar(1));

    // Table value: kappa_inf(P_5) prints as 1.56e4
    ExactScalar kp5 = exact_condition_inf(pascal_exact(5));
    CHECK(kp5 > rat(1555, 100) * 1000);
    CHECK(kp5 < rat(1565, 100) * 1000);

    // pivoting path: leading zero needs a row swap
    ExactMatrix z(2, 2, ExactScalar(0));
    z(0, 1) = 2;
    z(1, 0) = 3;
    ExactMatrix zi = exact_inverse(z);
    CHECK(zi(0, 1) == rat(1, 3));
    CHECK(zi(1, 0) == rat(1, 2));

    std::vector<ExactScalar> rhs{ExactScalar(1), ExactScalar(2)};
    auto x = exact_solve(hilbert_exact(2), rhs);
    CHECK(multiply(hilbert_exact(2), x) == rhs);
}

TEST_CASE("inverse times original is the identity, random rationals") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        ExactMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = rat(num(rng), den(rng));
                if (i == j) a(i, j) += 10; // keep it comfortably nonsingular
            }
        CHECK(multiply(exact_inverse(a), a) == ExactMatrix::identity(n));
    }
}

TEST_CASE("minor enumeration TN verdicts") {
    CHECK(is_totally_nonnegative(pascal_exact(4)).tn);

    ExactMatrix bad(2, 2);
    bad(0, 0) = 1; bad(0, 1) = 2;
    bad(1, 0) = 3; bad(1, 1) = 1;
    auto verdict = is_totally_nonnegative(bad);
    CHECK(!verdict.tn);
    CHECK(verdict.rows == std::vector<std::size_t>{0, 1});
    CHECK(verdict.cols == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(is_totally_nonnegative(ExactMatrix::identity(8)), std::invalid_argument);
    CHECK(is_totally_nonnegative(ExactMatrix::identity(8), 8).tn);

    // nonnegative bidiagonal matrices are TN, and so are the inverses of
    // their comparison matrices
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        auto b = testgen::random_bidiagonal(n, testgen::Pattern::Nonnegative,
                                            trial % 2 ? Orientation::Lower : Orientation::Upper,
                                            rng);
        auto eb = to_exact(b);
        CHECK(is_totally_nonnegative(to_dense(eb)).tn);
        CHECK(is_totally_nonnegative(inverse_dense(comparison_matrix(eb))).tn);
    }
}

TEST_CASE("interval TN verdicts certify signs or abort") {
    // exp of the upper triangular Toeplitz [[1,1,1],[0,1,1],[0,0,1]]:
    // first row (e, e, 3e/2), constant along diagonals
    RationalInterval e = exp_enclosure(ExactScalar(1));
    RationalInterval e32 = RationalInterval(rat(3, 2)) * e;
    Matrix<RationalInterval> m(3, 3, RationalInterval(ExactScalar(0)));
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = e;
    m(0, 1) = e; m(1, 2) = e;
    m(0, 2) = e32;
    auto verdict = is_totally_nonnegative(m);
    CHECK(!verdict.tn);
    CHECK(verdict.rows == std::vector<std::size_t>{0, 1});
    CHECK(verdict.cols == std::vector<std::size_t>{1, 2});

    Matrix<RationalInterval> ok(2, 2, RationalInterval(ExactScalar(0)));
    ok(0, 0) = e; ok(1, 1) = e; ok(0, 1) = RationalInterval(ExactScalar(1));
    CHECK(is_totally_nonnegative(ok).tn);

    Matrix<RationalInterval> straddle(2, 2, RationalInterval(ExactScalar(0)));
    straddle(0, 0) = RationalInterval(ExactScalar(-1), ExactScalar(1));
    straddle(1, 1) = RationalInterval(ExactScalar(1));
    CHECK_THROWS_AS(is_totally_nonnegative(straddle), enclosure_error);
}

TEST_CASE("characteristic polynomial and sturm counting") {
    ExactMatrix d(3, 3, ExactScalar(0));
    d(0, 0) = 1; d(1, 1) = 2; d(2, 2) = 3;
    ExactPoly p = characteristic_polynomial(d);
    CHECK(p == ExactPoly{ExactScalar(-6), ExactScalar(11), ExactScalar(-6), ExactScalar(1)});
    CHECK(poly::is_squarefree(p));
    CHECK(poly::distinct_roots_above(p, ExactScalar(0)) == 3);
    CHECK(poly::distinct_real_roots(p) == 3);
    CHECK(poly::distinct_roots_above(p, ExactScalar(2)) == 1);

    ExactMatrix jordan(2, 2, ExactScalar(0));
    jordan(0, 0) = 1; jordan(0, 1) = 1; jordan(1, 1) = 1;
    ExactPoly q = characteristic_polynomial(jordan);
    CHECK(q == ExactPoly{ExactScalar(1), ExactScalar(-2), ExactScalar(1)});
    CHECK(!poly::is_squarefree(q));
    CHECK(poly::distinct_real_roots(q) == 1);

    ExactMatrix nil(2, 2, ExactScalar(0));
    nil(0, 1) = 1;
    ExactPoly r = characteristic_polynomial(nil);
    CHECK(r == ExactPoly{ExactScalar(0), ExactScalar(0), ExactScalar(1)});
    CHECK(poly::distinct_roots_above(r, ExactScalar(0)) == 0);
    CHECK(poly::distinct_real_roots(r) == 1);

    CHECK(poly::evaluate(p, ExactScalar(4)) == ExactScalar(6));
}

TEST_CASE("exact chain expansion") {
    auto inv_chain = single_factor_chain(to_exact(toeplitz_bidiagonal(3, -1.0)), true);
    ExactMatrix d = exact_chain_dense(inv_chain);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(d(i, j) == (j >= i ? ExactScalar(1) : ExactScalar(0)));

    FactorChain<ExactScalar> empty;
    empty.n = 2;
    CHECK(exact_chain_dense(empty) == ExactMatrix::identity(2));

    // chain conversions round trip
    std::mt19937_64 rng(53);
    auto c = testgen::random_chain(4, 3, testgen::Pattern::General, rng);
    c.scale = DiagonalScale<double>{2, {1.0, 2.0, 3.0, 4.0}};
    auto back = to_double(to_exact(c));
    CHECK(back.n == c.n);
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
        CHECK(back.factors[i].matrix.diag == c.factors[i].matrix.diag);
        CHECK(back.factors[i].matrix.off == c.factors[i].matrix.off);
    }
    CHECK(back.scale->diag == c.scale->diag);
    CHECK(back.scale->position == 2);
}

} // TEST_SUITE
