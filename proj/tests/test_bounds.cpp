#include <doctest.h>

#include <cmath>

#include "eroot/bounds.hpp"
#include "eroot/pade.hpp"
#include "eroot/verify.hpp"
#include "support/oracles.hpp"

using namespace eroot;

TEST_CASE("s(n,k)")
{
    CHECK(s_func_d(2, 2) == doctest::Approx(7.68724822269).epsilon(1e-9));
    CHECK(s_func_d(2, 3) == doctest::Approx(12.9514519699).epsilon(1e-9));
    // n = k: 2k (log 2k)^2
    CHECK(s_func_d(3, 3) ==
          doctest::Approx(6.0 * std::log(6.0) * std::log(6.0)).epsilon(1e-12));
    // hypothesis threshold at (2,2) is about 7.69 e^{7.69}
    Ball s = s_func(2, 2);
    Ball thr = s * Ball::exp(s);
    CHECK(thr.mid_double() == doctest::Approx(7.69 * std::exp(7.69)).epsilon(0.02));
    CHECK(!theorem_hypothesis(2, 2, std::log(1e9)));
    CHECK(theorem_hypothesis(2, 2, 20000.0));
}

TEST_CASE("q and r")
{
    // k=2, n=2, ell=10: 20 log 10 + 33.77257 + 20 log 2
    double expected = 20.0 * std::log(10.0) + 33.77257 + 20.0 * std::log(2.0);
    CHECK(q_func(10, 2, 2).mid_double() == doctest::Approx(expected).epsilon(1e-12));

    // k=3, n=2 linear coefficient: 3 log 3 + 3 log 2 + 2.16 + 0.000003
    Ball q2 = q_func(2, 2, 3);
    Ball q3 = q_func(3, 2, 3);
    double lin = 3 * std::log(3.0) + 3 * std::log(2.0) + 2.16 + 0.000003;
    // q(l) = 3 l log l + lin * l
    CHECK(q2.mid_double() ==
          doctest::Approx(6.0 * std::log(2.0) + 2.0 * lin).epsilon(1e-9));
    CHECK(q3.mid_double() ==
          doctest::Approx(9.0 * std::log(3.0) + 3.0 * lin).epsilon(1e-9));

    // strictly increasing in ell
    double prev = q_func(2, 2, 2).mid_double();
    for (long long ell = 3; ell < 40; ++ell) {
        double cur = q_func(ell, 2, 2).mid_double();
        CHECK(cur > prev);
        prev = cur;
    }

    // k=2: r(l)/l - log l = 0.64
    Ball r = r_func(1000, 2, 2);
    CHECK(r.mid_double() / 1000.0 - std::log(1000.0) == doctest::Approx(0.64).epsilon(1e-9));

    // k=3, n=2 at ell = e^15: positive
    long long big = static_cast<long long>(std::exp(15.0));
    CHECK(r_func(big, 2, 3).mid_double() > 0);

    // positive whenever log ell > k log k (sample)
    CHECK(r_func(1 << 20, 3, 4).mid_double() > 0);

    // variant plumbing: 0.174 makes r smaller for k >= 3
    CHECK(r_func(100, 2, 3, Ball::kDefaultPrec, DConstant::c0174).mid_double() <
          r_func(100, 2, 3, Ball::kDefaultPrec, DConstant::c017).mid_double());
}

TEST_CASE("z inverse")
{
    CHECK(z_inverse(0.0) == 1.0);
    CHECK(z_inverse(std::exp(1.0)) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(z_inverse(2.0 * std::log(2.0)) == doctest::Approx(2.0).epsilon(1e-14));

    Ball z = z_inverse_ball(Ball::from_double(100.0), 192);
    Ball back = z * Ball::log(z);
    CHECK(back.contains(Ball::from_double(100.0, 256)));

    for (const auto& c : z_inverse_suite()) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("bound parameter chain")
{
    BoundParams p22 = BoundParams::compute(2, 2);
    CHECK(p22.a.mid_double() == 2.0);
    CHECK(p22.c.mid_double() == 1.0);
    CHECK(p22.b.mid_double() == doctest::Approx(3.377257 + 2 * std::log(2.0)).epsilon(1e-9));
    CHECK(p22.d.mid_double() == doctest::Approx(-0.64).epsilon(1e-12));
    CHECK(p22.B.mid_double() > 0);
    CHECK(p22.F.mid_double() > 0);
    CHECK(p22.F.mid_double() < 1);
    CHECK(p22.v.mid_double() > 0);

    BoundParams p23 = BoundParams::compute(2, 3);
    CHECK(p23.v.mid_double() > 0);
    CHECK(p23.v.mid_double() < 1);
    double d_expected = 3 * std::log(3.0) - 0.81 * 3 - std::log(2.0) + 0.17;
    CHECK(p23.d.mid_double() == doctest::Approx(d_expected).epsilon(1e-9));
}

TEST_CASE("epsilon(H)")
{
    BoundParams p = BoundParams::compute(2, 2);

    // zero numerator
    BoundParams zeroed = p;
    zeroed.B = Ball(128);
    zeroed.C = Ball(128);
    EpsilonResult z = epsilon_H(Ball::from_double(1e6), zeroed);
    CHECK(z.value.mid_double() == doctest::Approx(0.0));

    // (2,2) at logH = 10 * s e^s: finite positive, hypothesis satisfied
    double logH = 10.0 * 7.68724822269 * std::exp(7.68724822269);
    EpsilonResult e = epsilon_H(Ball::from_double(logH), p);
    CHECK(e.value.mid_double() > 0);
    CHECK(std::isfinite(e.value.mid_double()));
    CHECK(e.hypothesis_satisfied);

    // decreasing for large logH
    EpsilonResult e2 = epsilon_H(Ball::from_double(10.0 * logH), p);
    CHECK(e2.value.mid_double() < e.value.mid_double());
}

TEST_CASE("omega(k, H)")
{
    // k=2 second-term coefficient
    Ball om = omega_theorem(2, Ball::exp(Ball::from_double(1000.0))).value;
    CHECK((om.mid_double() - 2.0) * 1000.0 == doctest::Approx(9.20222196911).epsilon(1e-6));

    // k=5 coefficient
    Ball om5 = omega_theorem(5, Ball::exp(Ball::from_double(1000.0))).value;
    CHECK((om5.mid_double() - 5.0) * 1000.0 == doctest::Approx(85.7907179081).epsilon(1e-6));

    // omega -> k as logH -> infinity
    Ball om_inf = omega_theorem(3, Ball::exp(Ball::from_double(1e9))).value;
    CHECK(om_inf.mid_double() == doctest::Approx(3.0).epsilon(1e-7));

    // log log H must be positive: H = 2 rejected
    CHECK_THROWS_AS(omega_theorem(2, Ball::from_double(std::log(2.0))),
                    std::domain_error);
    CHECK_THROWS_AS(omega_theorem_d(2, std::log(2.0)), std::domain_error);
    CHECK(omega_theorem_d(2, std::log(3.0)) > 2.0);
}

TEST_CASE("f quotient")
{
    CHECK(f_func(2, 3, theta_constant(3)) < 1.145);
    CHECK(f_func(2, 4, theta_constant(4)) < 1.114);
    CHECK(f_func(3, 3, theta_constant(3)) < 1.08);
    for (const auto& c : theorem_consistency_suite()) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("product maxima")
{
    Ball m22 = c_small_max(2, 2);
    CHECK(m22.mid_double() == doctest::Approx(0.0481125224324688).epsilon(1e-9));
    CHECK(m22.mid_double() <= 0.049);

    Ball m33 = c_small_max(3, 3);
    CHECK(m33.mid_double() <= 1.0 / 81.0 + 1e-12);

    Ball m44 = c_small_max(4, 4);
    CHECK(m44.mid_double() <= 0.004);

    Ball c2 = c_n_max(2);
    CHECK(c2.mid_double() == doctest::Approx(0.2640764738653).epsilon(1e-6));
    CHECK(c2.mid_double() < 1.0);
    for (int n = 5; n <= 7; ++n) {
        // every factor is at most 1 on [0,1] once n >= 5
        CHECK(c_n_max(n).mid_double() <= 1.0);
    }

    Ball raw22 = max_product_raw(2, 2);
    Ball bound22 = max_product_bound(2, 2);
    CHECK(raw22.mid_double() ==
          doctest::Approx(2.0 / (3.0 * std::sqrt(3.0) * 8.0)).epsilon(1e-10));
    CHECK(bound22.mid_double() ==
          doctest::Approx(2.0 / (3.0 * std::sqrt(3.0) * 8.0)).epsilon(1e-10));

    // k=5, n=2: bound = 120/(6*64)
    CHECK(max_product_bound(2, 5).mid_double() == doctest::Approx(0.3125).epsilon(1e-12));
}

TEST_CASE("incomplete gamma tail via the exact series")
{
    // frozen against an independent quadrature oracle (and spot values)
    Ball g = gamma_tail_series(make_rational(2, 1), 2, 2);
    CHECK(g.mid_double() == doctest::Approx(2.4409235300314).epsilon(1e-10));

    Ball g2 = gamma_tail_series(make_rational(3, 2), 3, 2);
    CHECK(g2.mid_double() == doctest::Approx(451.102664074486).epsilon(1e-10));

    Ball g3 = gamma_tail_series(make_rational(3, 1), 2, 4);
    CHECK(g3.mid_double() == doctest::Approx(43.2749919415059).epsilon(1e-10));

    // c = 2 corollary bound: value <= 2 e^{-2T} (2T)^{T-1}
    for (auto [k, ell] : std::vector<std::pair<int, long long>>{{2, 2}, {3, 2}, {2, 4}}) {
        long long T = ell * (k + 1);
        Ball v = gamma_tail_series(make_rational(2, 1), k, ell, 192);
        Ball cap = Ball::from_si(2, 192) *
                   Ball::exp(Ball::from_si(-2 * T, 192)) *
                   Ball::pow_ui(Ball::from_si(2 * T, 192), static_cast<unsigned long>(T - 1));
        CHECK(!Ball::certainly_less(cap, v));
    }

    // T = 1: pure exponential e^{-c}
    Ball tiny = gamma_tail_series(make_rational(5, 2), 0, 1);
    CHECK(tiny.mid_double() == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));

    CHECK_THROWS_AS(gamma_tail_series(make_rational(1, 1), 2, 2), std::domain_error);
    CHECK_THROWS_AS(gamma_tail_series(make_rational(1, 2), 2, 2), std::domain_error);

    // quadrature oracle agreement
    for (auto [cnum, cden, k, ell] : std::vector<std::array<long, 4>>{
             {2, 1, 2, 2}, {3, 2, 3, 2}, {3, 1, 2, 4}}) {
        Rational c = make_rational(cnum, cden);
        long long T = ell * (k + 1);
        Ball series = gamma_tail_series(c, static_cast<int>(k), ell, 192);
        Ball quad = eroot::testing::gamma_tail_quadrature(c * Rational(static_cast<long>(T)), T);
        CHECK(quad.contains(series));
    }
}

TEST_CASE("log-scale growth and decay bounds")
{
    // a_u0_bound increasing in ell
    CHECK(a_u0_bound(2, 3).mid_double() > a_u0_bound(2, 2).mid_double());
    CHECK(a_u0_bound(3, 8).mid_double() > a_u0_bound(3, 7).mid_double());

    // sum of e^{j/n} - 1 below n e^{(k+1)/n}
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 5}}) {
        double sum = 0;
        for (int j = 1; j <= k; ++j) sum += std::exp(static_cast<double>(j) / n) - 1.0;
        CHECK(sum < n * std::exp((k + 1.0) / n));
    }

    // exact sum of |L*| on a small grid below exp(sum_L_bound)
    for (auto [n, k, ell] : std::vector<std::array<long, 3>>{{2, 2, 2}, {2, 3, 3}}) {
        SystemValues sv = system_values_at_one(static_cast<int>(n), static_cast<int>(k), ell);
        Ball cap = Ball::exp(sum_L_bound(static_cast<int>(n), static_cast<int>(k), ell, 256));
        for (int u = 0; u <= k; ++u) {
            Ball total(192);
            for (int j = 1; j <= k; ++j) total = total + remainder_value(sv, j, u, 192).abs();
            CHECK(Ball::certainly_less(total, cap));
        }
    }

    // log factorial: exact path vs Stirling enclosure consistency
    Ball exact = log_factorial(50000);
    Ball mb = Ball::from_si(50000, 192);
    Ball pi_approx = Ball::from_double(3.141592653589793, 192);
    Ball stirling_lo = Ball::log(Ball::from_si(2, 192) * pi_approx * mb) / Ball::from_si(2, 192) +
                       mb * Ball::log(mb) - mb;
    CHECK(exact.mid_double() == doctest::Approx(stirling_lo.mid_double()).epsilon(1e-7));
    CHECK(log_factorial(1000000000000LL).mid_double() ==
          doctest::Approx(1000000000000.0 * (std::log(1e12) - 1.0)).epsilon(1e-6));
}

TEST_CASE("proof chain at sampled large ell")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
        for (long long ell : {1000000LL, 1000000000LL}) {
            for (const auto& c : proof_chain_suite(n, k, ell)) {
                INFO(c.name, ": ", c.detail);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("maxima table suite: known reference-value gap at (4,4)")
{
    // The 0.004 entry for (n,k) = (4,4) is more than 10% above the true
    // maximum (about 0.0035463), so the within-0.9 reproduction check
    // cannot hold there; everything else in the table reproduces.
    for (const auto& c : maxima_table_suite()) {
        INFO(c.name, ": ", c.detail);
        if (c.name == "table-within-0.9(n=4,k=4)") {
            CHECK(!c.pass);
        } else {
            CHECK(c.pass);
        }
    }
    for (const auto& c : max_product_suite()) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
