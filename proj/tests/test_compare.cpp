#include <doctest.h>

#include <cmath>

#include "eroot/compare.hpp"
#include "eroot/verify.hpp"

using namespace eroot;

TEST_CASE("Mahler C(r)")
{
    CHECK(mahler_C(10, 2, 2) == doctest::Approx(173.255674472).epsilon(1e-9));

    // r = e: C = (k+1)^2 e sqrt(log(n+k+1))
    double c_e = mahler_C(std::exp(1.0), 2, 2);
    CHECK(c_e == doctest::Approx(9.0 * std::exp(1.0) * std::sqrt(std::log(5.0))).epsilon(1e-12));

    // increasing in r
    double prev = mahler_C(2, 2, 3);
    for (double r = 3; r < 50; r += 1) {
        double cur = mahler_C(r, 2, 3);
        CHECK(cur > prev);
        prev = cur;
    }

    Ball cb = mahler_C_ball(Ball::from_si(10), 2, 2);
    CHECK(cb.mid_double() == doctest::Approx(173.255674472).epsilon(1e-9));
}

TEST_CASE("Mahler r window is degenerate at searchable sizes")
{
    // r!/e^{2C(r)} stays far below every real coefficient bound until r is
    // astronomically large, so the sandwich search must exhaust.
    CHECK_THROWS_AS(mahler_r(pow_int(Int(10), 10), 2, 2, 20000), search_exhausted);
    CHECK_THROWS_AS(mahler_r(Int(1), 2, 2, 20000), search_exhausted);
    CHECK_THROWS_AS(mahler_r(Int(0), 2, 2), std::domain_error);

    // the published bracket as used by the comparison path
    double log_x = 100.0 * std::log(10.0);
    double r = log_x / std::log(log_x);
    CHECK(!mahler_bracket_contains(r, log_x));  // open lower endpoint
    CHECK(mahler_bracket_contains(2.0 * r, log_x));
    CHECK(mahler_bracket_contains(5.9 * r, log_x));
    CHECK(!mahler_bracket_contains(6.1 * r, log_x));
}

TEST_CASE("Mahler exponent")
{
    // tends to k as log H grows
    Ball big = Ball::exp(Ball::from_double(1e9, 128));
    CHECK(mahler_exponent(big, 2, 2, 128).mid_double() == doctest::Approx(2.0).epsilon(1e-3));

    // The exact-formula correction sits above the published asymptotic
    // shape (which drops a factor of roughly (k+1)); both decay like
    // 1/sqrt(log log H).
    Ball logH = Ball::exp(Ball::from_double(1e6, 128));
    double exact = mahler_exponent(logH, 2, 5, 128).mid_double() - 5.0;
    double heur = mahler_exponent_heuristic(Ball::from_double(1e6, 128), 2, 5, 128).mid_double() - 5.0;
    CHECK(exact / heur > 1.0);
    CHECK(exact / heur < 3.0 * 6.0);
    Ball logH4 = Ball::exp(Ball::from_double(1e8, 128));
    double exact4 = mahler_exponent(logH4, 2, 5, 128).mid_double() - 5.0;
    CHECK(exact4 == doctest::Approx(exact / 10.0).epsilon(0.05));
}

TEST_CASE("EHLM exponent")
{
    CHECK(ehlm_ck(2) == 13);
    CHECK(ehlm_ck(3) == 12);

    // sqrt argument is log(n + k): reconstruct by hand at one point
    double llM = 1e4;
    Ball logM = Ball::exp(Ball::from_double(llM, 128));
    double v = ehlm_exponent(logM, 2, 3, 128).mid_double();
    double expected = 3.0 + 12.0 * 9.0 * std::sqrt(std::log(5.0) / llM);
    CHECK(v == doctest::Approx(expected).epsilon(1e-9));

    // tends to k
    Ball vast = Ball::exp(Ball::from_double(1e14, 128));
    CHECK(ehlm_exponent(vast, 2, 2, 128).mid_double() == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("comparison report")
{
    auto rows = compare_report(2, 5, {1e3, 1e3, 1e6});
    REQUIRE(rows.size() == 3);

    // duplicates give identical rows
    CHECK(rows[0].exp_this_paper == rows[1].exp_this_paper);
    CHECK(rows[0].exp_mahler == rows[1].exp_mahler);
    CHECK(rows[0].exp_ehlm == rows[1].exp_ehlm);

    for (const auto& r : rows) {
        CHECK(r.exp_this_paper > r.k);
        CHECK(r.exp_mahler > r.k);
        CHECK(r.exp_ehlm > r.k);
        CHECK(r.winner == "this-work");
    }

    // every (n,k) with 2 <= n <= k <= 10 is won by log log H = 1e6
    for (int n = 2; n <= 10; ++n) {
        for (int k = std::max(n, 2); k <= 10; ++k) {
            auto row = compare_report(n, k, {1e6}).at(0);
            CHECK(row.exp_this_paper < row.exp_mahler);
            CHECK(row.exp_this_paper < row.exp_ehlm);
        }
    }

    CHECK_THROWS_AS(compare_report(2, 2, {0.5}), std::domain_error);

    for (const auto& c : comparison_suite()) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
