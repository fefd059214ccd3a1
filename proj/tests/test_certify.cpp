#include <doctest.h>

#include <cmath>

#include "eroot/bounds.hpp"
#include "eroot/certify.hpp"
#include "eroot/series.hpp"
#include "support/oracles.hpp"

using namespace eroot;

TEST_CASE("H = 1 minimum in closed form")
{
    CertificateRecord rec = min_linear_form(2, 2, 1);
    // e - e^{1/2} - 1
    Ball exact = Ball::exp(Ball::from_si(1, 256)) -
                 Ball::exp(Ball::from_rational(make_rational(1, 2), 256)) -
                 Ball::from_si(1, 256);
    CHECK(rec.min_value.contains(exact));
    CHECK(rec.min_value.mid_double() == doctest::Approx(0.0695605577589171).epsilon(1e-10));

    // argmin is (-1,-1,1) up to global sign
    std::vector<long long> a = rec.argmin;
    REQUIRE(a.size() == 3);
    bool plus = a == std::vector<long long>{-1, -1, 1};
    bool minus = a == std::vector<long long>{1, 1, -1};
    CHECK((plus || minus));

    CHECK(rec.tuples_scanned == 4);  // (3^2 - 1)/2
    CHECK(std::isnan(rec.empirical_omega));
}

TEST_CASE("feasible point gives an upper bound")
{
    for (long long H : {1LL, 4LL, 9LL}) {
        CertificateRecord rec = min_linear_form(2, 2, H);
        double ekn = std::exp(1.0);  // e^{k/n} with k=2, n=2
        double feasible = std::fabs(ekn - std::nearbyint(ekn));
        CHECK(rec.min_value.mid_double() <= feasible + 1e-12);
    }
}

TEST_CASE("nested feasible sets")
{
    CertificateRecord h1 = min_linear_form(2, 3, 1);
    CertificateRecord h5 = min_linear_form(2, 3, 5);
    CHECK(h5.min_value.mid_double() < h1.min_value.mid_double());
    CHECK(h5.min_value.is_positive());
}

TEST_CASE("reduced scan equals the naive full enumeration")
{
    for (int k : {2, 3}) {
        for (long long H = 1; H <= 3; ++H) {
            CertificateRecord fast = min_linear_form(2, k, H);
            auto naive = eroot::testing::naive_min_linear_form(2, k, H);
            CHECK(fast.min_value.mid_double() ==
                  doctest::Approx(naive.value.mid_double()).epsilon(1e-13));
            // same tuple up to global sign
            std::vector<long long> neg(naive.argmin.size());
            for (size_t i = 0; i < neg.size(); ++i) neg[i] = -naive.argmin[i];
            CHECK((fast.argmin == naive.argmin || fast.argmin == neg));
        }
    }
}

TEST_CASE("optimal lambda0 reduction is sound")
{
    const mpfr_prec_t prec = 192;
    std::vector<Ball> x;
    x.push_back(Ball::from_si(1, prec));
    for (int i = 1; i <= 2; ++i) x.push_back(real_exp_fraction(i, 2, prec));

    for (long long l1 = -4; l1 <= 4; ++l1) {
        for (long long l2 = -4; l2 <= 4; ++l2) {
            if (l1 == 0 && l2 == 0) continue;
            Ball s = x[1].mul_int(Int(static_cast<long>(l1))) +
                     x[2].mul_int(Int(static_cast<long>(l2)));
            // nearest integer to -s
            double sm = s.mid_double();
            long best = std::lround(-sm);
            Ball chosen = s.add_int(Int(best)).abs();
            CHECK(chosen.mid_double() <= 0.5 + 1e-9);
            for (long delta : {-2L, -1L, 1L, 2L}) {
                Ball other = s.add_int(Int(best + delta)).abs();
                CHECK(!Ball::certainly_less(other, chosen));
            }
        }
    }
}

TEST_CASE("scan count formula")
{
    for (auto [k, H] : std::vector<std::pair<int, long long>>{{2, 1}, {2, 7}, {3, 2}}) {
        CertificateRecord rec = min_linear_form(2, k, H);
        unsigned long long full = 1;
        for (int i = 0; i < k; ++i) full *= static_cast<unsigned long long>(2 * H + 1);
        CHECK(rec.tuples_scanned == (full - 1) / 2);
    }
}

TEST_CASE("certify against the final exponent")
{
    CertificateRecord rec = certify_against_theorem(2, 2, 10);
    CHECK(!rec.hypothesis_satisfied);  // threshold is e^{s e^s}, astronomically large
    CHECK(rec.verdict);
    CHECK(rec.theorem_omega == doctest::Approx(omega_theorem_d(2, std::log(10.0))));
    CHECK(rec.empirical_omega <= rec.theorem_omega);

    CHECK_THROWS_AS(certify_against_theorem(2, 2, 2), std::domain_error);
}

TEST_CASE("empirical omega curve")
{
    auto records = empirical_omega_curve(2, 2, {3, 10, 30, 10});
    REQUIRE(records.size() == 4);
    CHECK(records[0].min_value.mid_double() >= records[1].min_value.mid_double());
    CHECK(records[1].min_value.mid_double() >= records[2].min_value.mid_double());
    for (const auto& r : records) {
        CHECK(r.verdict);
        CHECK(r.empirical_omega <= r.theorem_omega);
        CHECK(!r.hypothesis_satisfied);
    }
    // duplicate H values give identical results
    CHECK(records[1].argmin == records[3].argmin);
    CHECK(records[1].min_value.mid_string(25) == records[3].min_value.mid_string(25));
}

TEST_CASE("parallel scan is identical to sequential")
{
    CertificateRecord seq = min_linear_form(2, 3, 20, 0, 1);
    CertificateRecord par = min_linear_form(2, 3, 20, 0, 4);
    CHECK(seq.argmin == par.argmin);
    CHECK(seq.min_value.mid_string(30) == par.min_value.mid_string(30));
    CHECK(seq.tuples_scanned == par.tuples_scanned);
}

TEST_CASE("bounded lambda0 variant")
{
    CertificateRecord rec = min_linear_form(2, 2, 1, 0, 1, true);
    CHECK(rec.lambda0_bounded);
    // at H = 1 the optimal lambda0 already lies in [-1, 1]
    CHECK(rec.min_value.mid_double() == doctest::Approx(0.0695605577589171).epsilon(1e-10));

    // with the clamp active the reachable minimum can only grow
    CertificateRecord free_h2 = min_linear_form(2, 2, 2);
    CertificateRecord clamped_h2 = min_linear_form(2, 2, 2, 0, 1, true);
    CHECK(clamped_h2.min_value.mid_double() >= free_h2.min_value.mid_double() - 1e-15);
}

TEST_CASE("input guards")
{
    CHECK_THROWS_AS(min_linear_form(2, 2, 0), std::domain_error);
    CHECK_THROWS_AS(min_linear_form(3, 2, 5), std::domain_error);
    CHECK_THROWS_AS(empirical_omega_curve(2, 2, {2}), std::domain_error);
}
