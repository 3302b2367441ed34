#include "bidiag/experiments.hpp"

#include <limits>

#include "doctest.h"

using namespace bidiag;

TEST_SUITE("experiments") {

TEST_CASE("significant-digit matching") {
    CHECK(matches_significant_digits(2.84e4, 2.84e4, 3));
    CHECK(matches_significant_digits(2.8449e4, 2.84e4, 3));
    CHECK(!matches_significant_digits(2.8951e4, 2.84e4, 3));
    CHECK(matches_significant_digits(2.88e4, 2.84e4, 2));
    CHECK(matches_significant_digits(1.357e47, 1.36e47, 2));
    CHECK(!matches_significant_digits(1.47e47, 1.36e47, 2));

    // degenerate inputs never match
    CHECK(!matches_significant_digits(1.0, 0.0, 3));
    CHECK(!matches_significant_digits(1.0, 1.0, 0));
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(!matches_significant_digits(nan, 1.0, 3));
    CHECK(!matches_significant_digits(1.0, nan, 3));
}

TEST_CASE("pascal solve experiment") {
    auto rep = pascal_solve_experiment();
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.pass);
    CHECK(rep.runtime_seconds < 2.0);

    const std::size_t ns[] = {5, 10, 15, 20, 25};
    const double refs[] = {7.99e-15, 3.80e-14, 9.02e-14, 1.65e-13, 2.61e-13};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& r = rep.rows[i];
        CHECK(r.n == ns[i]);
        CHECK(r.reference_bound == refs[i]);
        CHECK(r.chain_at_precision);
        CHECK(r.chain_error <= 5e-16);
        CHECK(r.chain_below_bound);
        CHECK(r.chain_error <= r.bound);
        CHECK(r.bound_matches_reference);
        CHECK(r.lu_degraded);
        if (r.n >= 10) CHECK(r.lu_error >= 10.0 * r.chain_error);
    }
    // the dense solver loses everything long before n = 25
    CHECK(rep.rows[4].lu_error > 1e-3);

    // rerun gives bitwise identical numbers
    auto rep2 = pascal_solve_experiment();
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rep2.rows[i].chain_error == rep.rows[i].chain_error);
        CHECK(rep2.rows[i].lu_error == rep.rows[i].lu_error);
        CHECK(rep2.rows[i].bound == rep.rows[i].bound);
    }
}

TEST_CASE("hilbert condition experiment") {
    auto rep = hilbert_cond_experiment();
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.pass);
    CHECK(rep.runtime_seconds < 5.0);

    const std::size_t ns[] = {4, 8, 16, 32, 64};
    const double refs[] = {2.84e4, 3.39e10, 5.06e22, 1.36e47, 1.10e96};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& r = rep.rows[i];
        CHECK(r.n == ns[i]);
        CHECK(r.reference == refs[i]);
        CHECK(r.oracle_checked == (r.n <= 16));
        if (r.oracle_checked) CHECK(r.oracle_rel_error <= 5e-15);
        CHECK(r.within_oracle_tol);
        CHECK(r.matches_reference);
        CHECK(r.reference_digits == (r.n <= 16 ? 3 : 2));
    }
}

TEST_CASE("pascal condition experiment") {
    auto rep = pascal_cond_experiment();
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.pass);

    const std::size_t ns[] = {5, 10, 15, 20, 25};
    const double refs[] = {1.56e4, 8.13e9, 5.77e15, 4.50e21, 3.81e27};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& r = rep.rows[i];
        CHECK(r.n == ns[i]);
        CHECK(r.reference == refs[i]);
        CHECK(r.factored_ok);
        CHECK(r.factored_rel_error <= 5e-15);
        CHECK(r.reference_ok);
        CHECK(r.dense_degraded);
        if (r.n >= 15) CHECK(r.dense_rel_error >= 1e-8);
    }
    // the dense estimate is fine while the matrix is still representable
    // and mild, then decays by orders of magnitude
    CHECK(rep.rows[0].dense_rel_error < 1e-10);
    CHECK(rep.rows[4].dense_rel_error > 1e-4);
}

} // TEST_SUITE
