#include "eroot/compare.hpp"

#include <cmath>

#include "eroot/bounds.hpp"

namespace eroot {

double mahler_C(double r, int n, int k)
{
    if (r < 2) throw std::domain_error("mahler_C: need r >= 2");
    double kk = static_cast<double>(k) + 1.0;
    return kk * kk * r * std::sqrt(std::log(static_cast<double>(n + k + 1)) * std::log(r));
}

Ball mahler_C_ball(const Ball& r, int n, int k, mpfr_prec_t prec)
{
    Ball kk = Ball::from_si(k + 1, prec);
    Ball lg = Ball::log(Ball::from_si(n + k + 1, prec));
    return kk * kk * r * Ball::sqrt(lg * Ball::log(r));
}

long long mahler_r(const Int& max_coeff, int n, int k, long long ceiling)
{
    if (max_coeff < 1) throw std::domain_error("mahler_r: need max_coeff >= 1");
    const mpfr_prec_t prec = 128;
    Ball log_x = Ball::log(Ball::from_int(max_coeff, prec));
    for (long long r = 2; r <= ceiling; ++r) {
        // window [log (r-1)! - 2C(r-1), log r! - 2C(r))
        Ball lower = log_factorial(r - 1, prec) -
                     Ball::from_si(2, prec) * mahler_C_ball(Ball::from_si(r - 1, prec), n, k, prec);
        Ball upper = log_factorial(r, prec) -
                     Ball::from_si(2, prec) * mahler_C_ball(Ball::from_si(r, prec), n, k, prec);
        bool above_lower = !Ball::certainly_less(log_x, lower);
        bool below_upper = Ball::certainly_less(log_x, upper);
        if (above_lower && below_upper) return r;
    }
    throw search_exhausted("mahler_r: no admissible r below the ceiling");
}

bool mahler_bracket_contains(double r, double log_x)
{
    double b = log_x / std::log(log_x);
    return b < r && r < 6.0 * b;
}

Ball mahler_exponent(const Ball& logH, int n, int k, mpfr_prec_t prec)
{
    Ball llH = Ball::log(logH);
    Ball r = logH / llH;
    Ball c = mahler_C_ball(r, n, k, prec);
    Ball factor = Ball::from_si(2 * (k + 1), prec) - Ball::from_rational(make_rational(1, 4), prec);
    Ball log2 = Ball::log(Ball::from_si(2, prec));
    return Ball::from_si(k, prec) - Ball::from_si(k, prec) * log2 / logH + factor * c / logH;
}

Ball mahler_exponent_heuristic(const Ball& log_logH, int n, int k, mpfr_prec_t prec)
{
    (void)n;
    Ball kk = Ball::from_si(k + 1, prec);
    Ball lk = Ball::log(Ball::from_si(k, prec));
    return Ball::from_si(k, prec) +
           Ball::from_si(2, prec) * kk * kk * Ball::sqrt(lk / log_logH);
}

int ehlm_ck(int k)
{
    return k < 3 ? 13 : 12;
}

Ball ehlm_exponent(const Ball& logM, int n, int k, mpfr_prec_t prec)
{
    Ball llM = Ball::log(logM);
    Ball lg = Ball::log(Ball::from_si(n + k, prec));
    Ball log2 = Ball::log(Ball::from_si(2, prec));
    return Ball::from_si(k, prec) +
           Ball::from_si(ehlm_ck(k), prec) * Ball::from_si(k, prec) * Ball::from_si(k, prec) *
               Ball::sqrt(lg / llM) -
           Ball::from_si(k, prec) * log2 / logM;
}

std::vector<ComparisonRow> compare_report(int n, int k,
                                          const std::vector<double>& log_logH_values,
                                          mpfr_prec_t prec)
{
    if (n < 2 || k < n) throw std::domain_error("compare_report: need k >= n >= 2");
    std::vector<ComparisonRow> rows;
    rows.reserve(log_logH_values.size());
    for (double llH : log_logH_values) {
        if (!(llH > 1.0))
            throw std::domain_error("compare_report: need log log H > 1");
        Ball llHb = Ball::from_double(llH, prec);
        Ball logH = Ball::exp(llHb);

        ComparisonRow row;
        row.n = n;
        row.k = k;
        row.log_logH = llH;
        OmegaResult om = omega_theorem(k, logH, n, prec);
        row.exp_this_paper = om.value.mid_double();
        row.hypothesis_satisfied = om.hypothesis_satisfied;
        row.exp_mahler = mahler_exponent(logH, n, k, prec).mid_double();
        row.exp_mahler_heuristic = mahler_exponent_heuristic(llHb, n, k, prec).mid_double();
        row.exp_ehlm = ehlm_exponent(logH, n, k, prec).mid_double();

        row.winner = "this-work";
        double best = row.exp_this_paper;
        if (row.exp_mahler < best) {
            best = row.exp_mahler;
            row.winner = "mahler";
        }
        if (row.exp_ehlm < best) {
            row.winner = "ehlm";
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace eroot
