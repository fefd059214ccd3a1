#include "eroot/verify.hpp"

#include <cmath>
#include <sstream>

#include "eroot/compare.hpp"
#include "eroot/pade.hpp"
#include "eroot/series.hpp"

namespace eroot {

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

CheckResult make_check(std::string name, bool pass, std::string detail = {})
{
    return CheckResult{std::move(name), pass, std::move(detail)};
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& checks)
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

GridSpec GridSpec::default_grid()
{
    GridSpec g;
    for (int n = 2; n <= 3; ++n)
        for (int k = n; k <= 5; ++k) g.nk.emplace_back(n, k);
    return g;
}

bool remainder_symmetric_point(int k, int u, int j, long ell)
{
    // roots {s/n} invariant under x -> j/n - x only for j = k with a
    // palindromic multiplicity vector, i.e. u = k/2; the integral
    // int_0^{k/n} Omega vanishes when Omega is antisymmetric, i.e. L odd
    return j == k && k % 2 == 0 && u == k / 2 && ((k + 1) * ell - 1) % 2 == 1;
}

std::vector<CheckResult> structural_suite(const GridSpec& grid, int jobs, DConstant,
                                          RemainderOrderCheck mode)
{
    std::vector<CheckResult> out;
    for (auto [n, k] : grid.nk) {
        for (long ell = grid.ell_lo; ell <= grid.ell_hi; ++ell) {
            std::ostringstream tag;
            tag << "(n=" << n << ",k=" << k << ",ell=" << ell << ")";
            const long L = (static_cast<long>(k) + 1) * ell - 1;

            ApproximationSystem sys;
            try {
                sys = normalize_system(n, k, ell, jobs);
                out.push_back(make_check("integrality" + tag.str(), true));
            } catch (const construction_error& e) {
                out.push_back(make_check("integrality" + tag.str(), false, e.what()));
                continue;
            }

            bool degrees_ok = true;
            for (int u = 0; u <= k && degrees_ok; ++u) {
                for (int j = 0; j <= k && degrees_ok; ++j) {
                    long lj = (j == u) ? ell - 1 : ell;
                    degrees_ok = sys.a_star[static_cast<size_t>(u)][static_cast<size_t>(j)]
                                     .degree() == L - lj;
                }
            }
            out.push_back(make_check("degree-law" + tag.str(), degrees_ok));

            bool rem_ok = true;
            std::string rem_detail;
            for (int u = 0; u <= k && rem_ok; ++u) {
                for (int j = 1; j <= k && rem_ok; ++j) {
                    TruncatedSeries r = remainder_series(j, u, n, k, ell, L + 2);
                    for (long i = 0; i <= L && rem_ok; ++i) {
                        if (sgn(r.coefficient(static_cast<size_t>(i))) != 0) {
                            rem_ok = false;
                            rem_detail = "nonzero low coefficient at u=" + std::to_string(u) +
                                         " j=" + std::to_string(j) + " i=" + std::to_string(i);
                        }
                    }
                    if (!rem_ok) break;
                    const bool at_L1 = sgn(r.coefficient(static_cast<size_t>(L + 1))) != 0;
                    const bool at_L2 = sgn(r.coefficient(static_cast<size_t>(L + 2))) != 0;
                    if (mode == RemainderOrderCheck::strict_L_plus_1) {
                        if (!at_L1) {
                            rem_ok = false;
                            rem_detail = "vanishing coefficient at order L+1, u=" +
                                         std::to_string(u) + " j=" + std::to_string(j) +
                                         (remainder_symmetric_point(k, u, j, ell)
                                              ? " (reflection-symmetric point, first nonzero at L+2)"
                                              : "");
                        }
                    } else {
                        bool ok = at_L1 ||
                                  (remainder_symmetric_point(k, u, j, ell) && at_L2);
                        if (!ok) {
                            rem_ok = false;
                            rem_detail = "remainder order too high at u=" + std::to_string(u) +
                                         " j=" + std::to_string(j);
                        }
                    }
                }
            }
            out.push_back(make_check("remainder-order" + tag.str(), rem_ok, rem_detail));

            Int det = system_determinant(sys);
            out.push_back(make_check("determinant-nonzero" + tag.str(), sgn(det) != 0,
                                     "det = " + to_string(det)));

            bool sigma_ok = true;
            AlphaVector alpha = AlphaVector::create(n, k);
            for (int u = 0; u <= k && sigma_ok; ++u) {
                ExponentVector ev = ExponentVector::family(k, ell, u);
                Polynomial om = omega_poly(alpha, ev);
                for (long i = 0; i <= L && sigma_ok; ++i) {
                    sigma_ok = sigma_closed_form(i, ev, alpha) ==
                               om.coefficient(static_cast<size_t>(i));
                }
            }
            out.push_back(make_check("sigma-closed-form" + tag.str(), sigma_ok));
        }
    }
    return out;
}

std::vector<CheckResult> maxima_table_suite(mpfr_prec_t prec, bool reproduction_band)
{
    struct Entry {
        int n, k;
        Rational v;
    };
    const std::vector<Entry> table = {
        {2, 2, make_rational(49, 1000)},  {2, 3, make_rational(1, 16)},
        {3, 3, make_rational(1, 81)},     {2, 4, make_rational(114, 1000)},
        {3, 4, make_rational(15, 1000)},  {4, 4, make_rational(4, 1000)},
    };

    std::vector<CheckResult> out;
    for (const auto& e : table) {
        std::ostringstream tag;
        tag << "(n=" << e.n << ",k=" << e.k << ")";
        Ball computed = c_small_max(e.n, e.k, prec);
        Ball vb = Ball::from_rational(e.v, prec);
        Ball low = Ball::from_rational(make_rational(9, 10) * e.v, prec);

        bool not_above = !Ball::certainly_less(vb, computed);
        out.push_back(make_check("table-upper" + tag.str(), not_above,
                                 "computed " + fmt(computed.mid_double()) + " vs " +
                                     fmt(vb.mid_double())));
        if (reproduction_band) {
            bool above_09 = Ball::certainly_less(low, computed);
            out.push_back(make_check("table-within-0.9" + tag.str(), above_09,
                                     "computed " + fmt(computed.mid_double()) + " vs 0.9*v = " +
                                         fmt(low.mid_double())));
        }
    }

    // the (2,2) maximum in closed form: 1/(12 sqrt 3)
    Ball m22 = c_small_max(2, 2, prec);
    double exact22 = 1.0 / (12.0 * std::sqrt(3.0));
    out.push_back(make_check("closed-form(2,2)",
                             std::fabs(m22.mid_double() - exact22) <= 1e-6 &&
                                 m22.mid_double() <= 0.049,
                             fmt(m22.mid_double())));

    for (int n = 2; n <= 6; ++n) {
        Ball c = c_n_max(n, prec);
        out.push_back(make_check("c(n)<=1(n=" + std::to_string(n) + ")",
                                 !Ball::certainly_less(Ball::from_si(1, prec), c),
                                 fmt(c.mid_double())));
    }
    return out;
}

std::vector<CheckResult> max_product_suite(mpfr_prec_t prec)
{
    std::vector<CheckResult> out;
    for (int k = 3; k <= 10; ++k) {
        for (int n = 2; n <= 4; ++n) {
            Ball raw = max_product_raw(n, k, prec);
            Ball bound = Ball::from_rational(
                make_rational(factorial(static_cast<unsigned long>(k)),
                              Int(6) * pow_int(Int(n), static_cast<unsigned long>(k) + 1)),
                prec);
            bool ok = Ball::certainly_less(raw, bound) || bound.contains(raw);
            out.push_back(make_check("max-le-bound(n=" + std::to_string(n) +
                                         ",k=" + std::to_string(k) + ")",
                                     ok,
                                     fmt(raw.mid_double()) + " <= " + fmt(bound.mid_double())));
        }
    }
    for (int n = 2; n <= 4; ++n) {
        Ball raw = max_product_raw(n, 2, prec);
        double exact = 2.0 / (3.0 * std::sqrt(3.0) * std::pow(static_cast<double>(n), 3));
        bool ok = std::fabs(raw.mid_double() - exact) <= 1e-9;
        out.push_back(make_check("k2-exact(n=" + std::to_string(n) + ")", ok,
                                 fmt(raw.mid_double()) + " vs " + fmt(exact)));
    }
    return out;
}

std::vector<CheckResult> theorem_consistency_suite()
{
    std::vector<CheckResult> out;
    const double coeff2 = 4.0 * std::log(2.0) * 3.319;
    out.push_back(make_check("coeff-k2-9.2023", std::fabs(coeff2 - 9.2023) <= 0.001,
                             fmt(coeff2)));
    out.push_back(make_check("coeff-k2-vs-derivation", std::fabs(coeff2 - 9.202255) <= 0.001,
                             fmt(coeff2)));

    struct FCase {
        int n, k;
        double cap;
    };
    for (const auto& c : std::vector<FCase>{{2, 3, 1.145}, {2, 4, 1.114}, {3, 3, 1.08}}) {
        double f = f_func(c.n, c.k, theta_constant(c.k));
        out.push_back(make_check("f(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")",
                                 f < c.cap, fmt(f) + " < " + fmt(c.cap)));
    }

    bool sweep_ok = true;
    std::string sweep_detail;
    for (int k = 5; k <= 200 && sweep_ok; ++k) {
        double cap = 1.0 + 0.69 / (std::log(static_cast<double>(k)) - 1.0);
        for (int n = 2; n <= k && sweep_ok; ++n) {
            double f = f_func(n, k, 0.00000412);
            if (!(f < cap)) {
                sweep_ok = false;
                sweep_detail = "violated at n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    }
    out.push_back(make_check("f-sweep-k5-200", sweep_ok, sweep_detail));
    return out;
}

std::vector<CheckResult> deep_bound_suite(long ell, mpfr_prec_t prec, int jobs)
{
    std::vector<CheckResult> out;
    const int n = 2, k = 2;
    const mpfr_prec_t bound_prec = 256;

    Ball s = s_func(n, k, bound_prec);
    Ball threshold = Ball::exp(s);
    bool ell_ok = Ball::certainly_less(threshold, Ball::from_si(ell, bound_prec));
    out.push_back(make_check("ell-above-e^s", ell_ok,
                             "ell = " + std::to_string(ell) +
                                 ", e^s = " + fmt(threshold.mid_double())));

    SystemValues values = system_values_at_one(n, k, ell, jobs);
    Ball q = q_func(ell, n, k, bound_prec);
    Ball r = r_func(ell, n, k, bound_prec);
    Ball decay = Ball::exp(-r);

    for (int u = 0; u <= k; ++u) {
        Ball log_a = Ball::log_abs_int(values.at_one[static_cast<size_t>(u)][0], bound_prec);
        bool ok = Ball::certainly_less(log_a, q);
        out.push_back(make_check("log|A*(1)|<=q(ell) u=" + std::to_string(u), ok,
                                 fmt(log_a.mid_double()) + " <= " + fmt(q.mid_double())));
    }
    for (int u = 0; u <= k; ++u) {
        Ball total(prec);
        for (int j = 1; j <= k; ++j) {
            total = total + remainder_value(values, j, u, prec).abs();
        }
        bool ok = Ball::certainly_less(total, decay);
        std::ostringstream det;
        det << "log sum = " << fmt(Ball::log(total).mid_double())
            << " <= -r = " << fmt((-r).mid_double());
        out.push_back(make_check("sum|L*|<=e^{-r} u=" + std::to_string(u), ok, det.str()));
    }
    return out;
}

std::vector<CheckResult> proof_chain_suite(int n, int k, long long ell, mpfr_prec_t prec,
                                           DConstant variant)
{
    if (k < 3) throw std::domain_error("proof_chain_suite: sampled chain is for k >= 3");
    std::vector<CheckResult> out;
    std::ostringstream tag;
    tag << "(n=" << n << ",k=" << k << ",ell=" << static_cast<double>(ell) << ")";

    auto B = [&](long v) { return Ball::from_si(v, prec); };
    Ball lb = B(ell);
    Ball log_l = Ball::log(lb);
    Ball log2 = Ball::log(B(2));
    Ball log4 = Ball::log(B(4));
    Ball logk1 = Ball::log(B(k + 1));
    Ball logk = Ball::log(B(k));
    Ball logn = Ball::log(B(n));

    // 1/(ell-1) < 0.000003, i.e. log ell - log(ell-1) is absorbed
    {
        Ball lhs = Ball::from_rational(make_rational(Int(1), Int(static_cast<long>(ell)) - 1), prec);
        Ball rhs = Ball::from_rational(make_rational(3, 1000000), prec);
        out.push_back(make_check("inv-ell-small" + tag.str(),
                                 Ball::certainly_less(lhs, rhs), ""));
    }
    // (k+1)log(k+1) - k log k <= 1 + log(k+1)
    {
        Ball lhs = B(k + 1) * logk1 - B(k) * logk;
        Ball rhs = B(1) + logk1;
        out.push_back(make_check("k-log-step" + tag.str(),
                                 !Ball::certainly_less(rhs, lhs), ""));
    }
    // -k + (k+1)log2 + 1 + log(k+1) < 0.72 k
    {
        Ball lhs = -B(k) + B(k + 1) * log2 + B(1) + logk1;
        Ball rhs = Ball::from_rational(make_rational(72, 100), prec) * B(k);
        out.push_back(make_check("const-absorb" + tag.str(),
                                 Ball::certainly_less(lhs, rhs), ""));
    }
    // subleading block negative: -log l - log(k+1) + 0.5 log(l-1) + log4 - log sqrt(2pi) < 0
    {
        Ball half_log_lm1 = Ball::log(lb - B(1)) / B(2);
        Ball log_sqrt_2pi(prec);
        {
            Ball two_pi(prec);
            int t = mpfr_const_pi(two_pi.mid_mut(), MPFR_RNDN);
            two_pi.bump_rounding(t);
            log_sqrt_2pi = Ball::log(B(2) * two_pi) / B(2);
        }
        Ball lhs = -log_l - logk1 + half_log_lm1 + log4 - log_sqrt_2pi;
        out.push_back(make_check("subleading-negative" + tag.str(),
                                 lhs.is_negative(), ""));
    }
    // growth chain: a_u0_bound + k ell log n - log (ell-1)! <= q(ell)
    {
        Ball lhs = a_u0_bound(k, ell, prec) + B(k) * lb * logn - log_factorial(ell - 1, prec);
        Ball rhs = q_func(ell, n, k, prec);
        out.push_back(make_check("growth-chain" + tag.str(),
                                 !Ball::certainly_less(rhs, lhs),
                                 fmt(lhs.mid_double()) + " <= " + fmt(rhs.mid_double())));
    }
    // Stirling constant absorptions for the decay lemma
    {
        Ball log6 = Ball::log(B(6));
        Ball log_2pi(prec);
        {
            Ball pi(prec);
            int t = mpfr_const_pi(pi.mid_mut(), MPFR_RNDN);
            pi.bump_rounding(t);
            log_2pi = Ball::log(B(2) * pi);
        }
        Ball c1 = log6 - log_2pi / B(2) -
                  Ball::from_rational(make_rational(Int(1), Int(12) * Int(static_cast<long>(ell)) + 1), prec);
        bool ok1 = Ball::certainly_less(c1, Ball::from_rational(make_rational(88, 100), prec));
        Ball c2 = log_2pi / B(2) - log6 +
                  Ball::from_rational(make_rational(1, 12L * k), prec) + B(1);
        bool ok2 = Ball::certainly_less(c2, Ball::from_rational(make_rational(16, 100), prec));
        Ball c3 = logk / B(2) - B(k);
        bool ok3 = Ball::certainly_less(c3, -Ball::from_rational(make_rational(81, 100), prec) * B(k));
        out.push_back(make_check("stirling-constants" + tag.str(), ok1 && ok2 && ok3, ""));
    }
    // linear absorption: 0.5 log l + 2 log n + (k+1)/n + 0.88 < 0.00004 l
    {
        Ball lhs = log_l / B(2) + B(2) * logn +
                   Ball::from_rational(make_rational(k + 1, n), prec) +
                   Ball::from_rational(make_rational(88, 100), prec);
        Ball rhs = Ball::from_rational(make_rational(4, 100000), prec) * lb;
        out.push_back(make_check("linear-absorb" + tag.str(),
                                 Ball::certainly_less(lhs, rhs), ""));
    }
    // decay chain: sum_L_bound <= -r(ell)
    {
        Ball lhs = sum_L_bound(n, k, ell, prec);
        Ball rhs = -r_func(ell, n, k, prec, variant);
        out.push_back(make_check("decay-chain" + tag.str(),
                                 !Ball::certainly_less(rhs, lhs),
                                 fmt(lhs.mid_double()) + " <= " + fmt(rhs.mid_double())));
    }
    return out;
}

std::vector<CheckResult> z_inverse_suite()
{
    std::vector<CheckResult> out;

    bool grid_ok = true;
    bool monotone_ok = true;
    std::string detail;
    double prev_z = 0.0;
    const int points = 10000;
    // y = 0 plus a log-spaced sweep up to 1e12
    for (int i = 0; i <= points; ++i) {
        double y = (i == 0) ? 0.0
                            : std::pow(10.0, -3.0 + 15.0 * (i - 1) / (points - 1.0));
        double z = z_inverse(y);
        double resid = std::fabs(z * std::log(z) - y);
        if (resid > 1e-12 * std::max(1.0, y)) {
            grid_ok = false;
            detail = "residual " + fmt(resid) + " at y = " + fmt(y);
            break;
        }
        if (z + 1e-9 * std::max(1.0, z) < prev_z) monotone_ok = false;
        prev_z = z;
    }
    out.push_back(make_check("z-roundtrip-grid", grid_ok, detail));
    out.push_back(make_check("z-monotone", monotone_ok));

    out.push_back(make_check("z(0)=1", z_inverse(0.0) == 1.0));
    out.push_back(make_check("z(e)=e",
                             std::fabs(z_inverse(std::exp(1.0)) - std::exp(1.0)) < 1e-12));
    out.push_back(make_check("z(2log2)=2",
                             std::fabs(z_inverse(2.0 * std::log(2.0)) - 2.0) < 1e-12));
    return out;
}

std::vector<CheckResult> comparison_suite(mpfr_prec_t prec)
{
    std::vector<CheckResult> out;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}}) {
        std::vector<ComparisonRow> rows =
            compare_report(n, k, {1e3, 1e6}, prec);
        for (const auto& row : rows) {
            std::ostringstream tag;
            tag << "(n=" << n << ",k=" << k << ",llH=" << row.log_logH << ")";
            bool ordered = row.exp_this_paper < row.exp_ehlm &&
                           row.exp_this_paper < row.exp_mahler;
            out.push_back(make_check("ordering" + tag.str(), ordered,
                                     fmt(row.exp_this_paper) + " vs mahler " +
                                         fmt(row.exp_mahler) + ", ehlm " + fmt(row.exp_ehlm)));
        }
        auto corr = [k = k](double expv) { return expv - k; };
        double r_mahler_1e3 = corr(rows[0].exp_this_paper) / corr(rows[0].exp_mahler);
        double r_mahler_1e6 = corr(rows[1].exp_this_paper) / corr(rows[1].exp_mahler);
        double r_ehlm_1e3 = corr(rows[0].exp_this_paper) / corr(rows[0].exp_ehlm);
        double r_ehlm_1e6 = corr(rows[1].exp_this_paper) / corr(rows[1].exp_ehlm);
        std::ostringstream tag;
        tag << "(n=" << n << ",k=" << k << ")";
        out.push_back(make_check("ratio-decay-mahler" + tag.str(),
                                 r_mahler_1e3 >= 10.0 * r_mahler_1e6,
                                 fmt(r_mahler_1e3) + " -> " + fmt(r_mahler_1e6)));
        out.push_back(make_check("ratio-decay-ehlm" + tag.str(),
                                 r_ehlm_1e3 >= 10.0 * r_ehlm_1e6,
                                 fmt(r_ehlm_1e3) + " -> " + fmt(r_ehlm_1e6)));
    }
    return out;
}

}  // namespace eroot
