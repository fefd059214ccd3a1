#include <doctest.h>

#include "eroot/json_io.hpp"
#include "eroot/verify.hpp"
#include "eroot/pade.hpp"
#include "support/oracles.hpp"

using namespace eroot;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("omega expansion for the base example")
{
    AlphaVector alpha = AlphaVector::create(2, 2);
    ExponentVector ones = ExponentVector::uniform(2, 1);

    Polynomial om = omega_poly(alpha, ones);
    CHECK(om.coefficients() == rats({Rational(0), make_rational(-1, 2),
                                     make_rational(3, 2), Rational(-1)}));

    // alpha_1 is a root of a factor
    CHECK(om.evaluate(make_rational(1, 2)) == 0);

    // degree additivity
    ExponentVector twos = ExponentVector::uniform(2, 2);
    CHECK(omega_poly(alpha, twos).degree() == 6);

    // generic-entry route agrees with the scaled route
    Polynomial generic = omega_poly(alpha.entries, ones.entries);
    CHECK(generic.coefficients() == om.coefficients());
}

TEST_CASE("sigma closed form matches expansion")
{
    AlphaVector alpha = AlphaVector::create(2, 2);
    ExponentVector ones = ExponentVector::uniform(2, 1);

    CHECK(sigma_closed_form(0, ones, alpha) == 0);  // i < l_0
    CHECK(sigma_closed_form(1, ones, alpha) == make_rational(-1, 2));
    CHECK(sigma_closed_form(3, ones, alpha) == Rational(-1));

    for (auto [n, k, ell, u] : std::vector<std::array<int, 4>>{
             {2, 2, 3, 0}, {2, 3, 2, 2}, {3, 4, 2, 4}}) {
        AlphaVector a = AlphaVector::create(n, k);
        ExponentVector ev = ExponentVector::family(k, ell, u);
        Polynomial om = omega_poly(a, ev);
        for (long i = 0; i <= ev.total(); ++i) {
            CHECK(sigma_closed_form(i, ev, a) == om.coefficient(static_cast<size_t>(i)));
        }
    }
}

TEST_CASE("A_0 for the base example")
{
    AlphaVector alpha = AlphaVector::create(2, 2);
    ExponentVector ones = ExponentVector::uniform(2, 1);

    Polynomial a0 = a0_poly(ones, alpha);
    // A_0(t) = -t^2/2 + 3t - 6
    CHECK(a0.coefficients() == rats({Rational(-6), Rational(3), make_rational(-1, 2)}));
    CHECK(a0.degree() == 2);  // no t^3 term: sigma_0 = 0
    CHECK(a0.evaluate(Rational(1)) == make_rational(-7, 2));
}

TEST_CASE("A_j for the base example")
{
    AlphaVector alpha = AlphaVector::create(2, 2);
    ExponentVector ones = ExponentVector::uniform(2, 1);

    Polynomial a1 = aj_poly(1, ones, alpha);
    CHECK(a1.degree() == 2);  // L - l_1 = 3 - 1
    // Omega(x, beta^(1)) = (-1/2 - x)(-x)(1/2 - x) -> A_1(t) = t^2/4 - 6
    CHECK(a1.coefficients() == rats({Rational(-6), Rational(0), make_rational(1, 4)}));

    // lowest nonzero sigma index is l_j
    BetaVector beta = BetaVector::shifted(alpha, 2);
    Polynomial om_b = omega_poly(beta, ExponentVector::family(2, 3, 0));
    const auto& c = om_b.coefficients();
    for (int i = 0; i < 3; ++i) CHECK(c[static_cast<size_t>(i)] == 0);  // l_2 = 3
    CHECK(c[3] != 0);
}

TEST_CASE("normalized family: frozen values for (2,2,2)")
{
    ApproximationSystem sys = normalize_system(2, 2, 2);
    CHECK(sys.L == 5);
    CHECK(sys.norm_factor == make_rational(16, 1));

    CHECK(sys.a_star[0][0].coeffs ==
          std::vector<Int>{Int(-1920), Int(1152), Int(-312), Int(48), Int(-4)});
    CHECK(sys.a_star[0][1].coeffs ==
          std::vector<Int>{Int(-1920), Int(192), Int(24), Int(-4)});
    CHECK(sys.a_star[0][2].coeffs ==
          std::vector<Int>{Int(-1920), Int(-768), Int(-120), Int(-8)});

    auto values = sys.values_at_one();
    CHECK(values[0] == std::vector<Int>{Int(-1036), Int(-1708), Int(-2816)});
    CHECK(values[1] == std::vector<Int>{Int(-1136), Int(-1873), Int(-3088)});
    CHECK(values[2] == std::vector<Int>{Int(-1264), Int(-2084), Int(-3436)});

    CHECK(system_determinant(sys) == Int(-16));

    // lean evaluation path agrees with full construction
    SystemValues lean = system_values_at_one(2, 2, 2);
    CHECK(lean.at_one == values);
}

TEST_CASE("normalization factors and further determinants")
{
    ApproximationSystem s23 = normalize_system(2, 3, 2);
    CHECK(s23.norm_factor == make_rational(64, 1));
    CHECK(system_determinant(s23) == Int(20736));

    ApproximationSystem s33 = normalize_system(3, 3, 3);
    CHECK(s33.norm_factor == make_rational(19683, 2));
    CHECK(system_determinant(s33) == Int(2985984));

    CHECK_THROWS_AS(normalize_system(3, 2, 2), std::domain_error);  // k < n
    CHECK_THROWS_AS(normalize_system(2, 2, 1), std::domain_error);  // ell < 2
}

TEST_CASE("determinant helper")
{
    std::vector<std::vector<Int>> same_rows = {{Int(1), Int(2)}, {Int(1), Int(2)}};
    CHECK(determinant(same_rows) == 0);

    std::vector<std::vector<Int>> m = {{Int(0), Int(2), Int(1)},
                                       {Int(3), Int(-1), Int(4)},
                                       {Int(1), Int(0), Int(2)}};
    CHECK(determinant(m) == Int(-3));
}

TEST_CASE("remainder series vanishes through order L")
{
    AlphaVector alpha = AlphaVector::create(2, 2);
    ExponentVector ones = ExponentVector::uniform(2, 1);

    TruncatedSeries r3 = remainder_series(1, ones, alpha, 3);
    for (size_t i = 0; i <= 3; ++i) CHECK(r3.coefficient(i) == 0);

    TruncatedSeries r4 = remainder_series(1, ones, alpha, 4);
    CHECK(r4.coefficient(4) == make_rational(-1, 64));

    // family wrapper, u = 0, ell = 2: first nonzero coefficient at L+1 = 6
    TruncatedSeries rf = remainder_series(1, 0, 2, 2, 2, 6);
    for (size_t i = 0; i <= 5; ++i) CHECK(rf.coefficient(i) == 0);
    CHECK(rf.coefficient(6) == make_rational(-13, 3840));

    CHECK_THROWS_AS(remainder_series(1, ones, alpha, 2), std::domain_error);

    // synthetic self-test: alpha_j = 0 makes e^{0 t} A - A vanish identically
    TruncatedSeries e0 = series_of_exp(Rational(0), 5);
    Polynomial a0 = a0_poly(ones, alpha);
    TruncatedSeries diff = e0 * TruncatedSeries::of_polynomial(a0, 5) -
                           TruncatedSeries::of_polynomial(a0, 5);
    for (size_t i = 0; i <= 5; ++i) CHECK(diff.coefficient(i) == 0);
}

TEST_CASE("remainder first-order coefficient vanishes at symmetric points")
{
    // At j = k with k even, u = k/2 and odd L, Omega is antisymmetric about
    // k/(2n), so the t^{L+1} coefficient int_0^{k/n} Omega dx is exactly 0
    // and the series starts at L+2 instead.
    CHECK(remainder_symmetric_point(2, 1, 2, 2));
    CHECK(!remainder_symmetric_point(2, 1, 2, 3));  // L even: symmetric, not antisymmetric
    CHECK(!remainder_symmetric_point(2, 0, 2, 2));
    CHECK(!remainder_symmetric_point(3, 1, 3, 2));  // odd k: no palindromic u

    TruncatedSeries r = remainder_series(2, 1, 2, 2, 2, 7);  // L = 5
    for (size_t i = 0; i <= 6; ++i) CHECK(r.coefficient(i) == 0);
    CHECK(r.coefficient(7) == make_rational(1, 840));

    TruncatedSeries r3 = remainder_series(2, 1, 2, 2, 3, 9);  // L = 8, odd ell: generic again
    CHECK(r3.coefficient(9) == make_rational(-1, 5040));
}

TEST_CASE("structural suite in lemma mode passes on a small grid")
{
    GridSpec g;
    g.nk = {{2, 2}, {2, 4}};
    g.ell_lo = 2;
    g.ell_hi = 3;
    auto checks = structural_suite(g, 2);
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    // strict mode flags exactly the symmetric even-ell points
    auto strict = structural_suite(g, 2, DConstant::c017, RemainderOrderCheck::strict_L_plus_1);
    int failures = 0;
    for (const auto& c : strict)
        if (!c.pass) ++failures;
    CHECK(failures == 2);  // (2,2,ell=2) and (2,4,ell=2)
}

TEST_CASE("remainder value: ball of L*_{u,j}(1)")
{
    SystemValues v = system_values_at_one(2, 2, 2);
    Ball l = remainder_value(v, 1, 0, 128);
    CHECK(!l.contains_zero());

    // doubling precision at least halves the radius
    Ball l2 = remainder_value(v, 1, 0, 256);
    CHECK(l2.rad_double() <= l.rad_double() / 2);

    // |L*| below the per-j decay lemma bound on a small grid:
    // n^{k ell} (e^{j/n}-1)(k!)^ell / ((ell-1)! (c(k) n^{k+1})^{ell-1} n^k)
    for (auto [n, k, ell] : std::vector<std::array<long, 3>>{{2, 2, 2}, {2, 3, 2}, {3, 3, 3}}) {
        SystemValues sv = system_values_at_one(static_cast<int>(n), static_cast<int>(k), ell);
        const mpfr_prec_t prec = 256;
        Ball ck = (k == 2) ? Ball::from_si(3, prec) * Ball::sqrt(Ball::from_si(3, prec))
                           : Ball::from_si(6, prec);
        for (int u = 0; u <= k; ++u) {
            for (int j = 1; j <= k; ++j) {
                Ball lv = remainder_value(sv, j, u, 192).abs();
                Ball num = Ball::from_int(pow_int(Int(n), static_cast<unsigned long>(k * ell)), prec) *
                           (Ball::exp(Ball::from_rational(make_rational(j, n), prec)) -
                            Ball::from_si(1, prec)) *
                           Ball::pow_ui(Ball::from_int(factorial(static_cast<unsigned long>(k)), prec),
                                        static_cast<unsigned long>(ell));
                Ball den = Ball::from_int(factorial(static_cast<unsigned long>(ell - 1)), prec) *
                           Ball::pow_ui(ck * Ball::from_int(pow_int(Int(n), static_cast<unsigned long>(k) + 1), prec),
                                        static_cast<unsigned long>(ell - 1)) *
                           Ball::from_int(pow_int(Int(n), static_cast<unsigned long>(k)), prec);
                CHECK(Ball::certainly_less(lv, num / den));
            }
        }
    }
}

TEST_CASE("Laplace route: quadrature encloses A_0(1)")
{
    for (auto [n, k, ell] : std::vector<std::array<int, 3>>{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}}) {
        AlphaVector alpha = AlphaVector::create(n, k);
        ExponentVector ev = ExponentVector::uniform(k, ell);
        Polynomial om = omega_poly(alpha, ev);
        Polynomial a0 = a0_poly(ev, alpha);
        Rational exact = a0.evaluate(Rational(1));
        Ball quad = eroot::testing::laplace_quadrature(om, 96, 60000);
        CHECK(quad.contains(Ball::from_rational(exact, 256)));
    }
}

TEST_CASE("system JSON document")
{
    ApproximationSystem sys = normalize_system(2, 2, 2);
    ordered_json doc = system_to_json(sys);
    CHECK(doc["determinant"] == "-16");
    CHECK(doc["norm_factor"]["num"] == "16");
    CHECK(doc["systems"].size() == 3);
    CHECK(doc["systems"][0]["polys"][0].size() == 5);
    // deterministic rendering
    CHECK(doc.dump() == system_to_json(sys).dump());
}
