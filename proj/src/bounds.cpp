#include "eroot/bounds.hpp"

#include <cmath>
#include <functional>

namespace eroot {

namespace {

Rational rc(long num, long den) { return make_rational(num, den); }

// carried-precision shorthands
Ball bsi(long v, mpfr_prec_t p) { return Ball::from_si(v, p); }
Ball brat(const Rational& q, mpfr_prec_t p) { return Ball::from_rational(q, p); }

Ball log_si(long v, mpfr_prec_t p) { return Ball::log(bsi(v, p)); }

Ball pi_ball(mpfr_prec_t prec)
{
    Ball r(prec);
    int t = mpfr_const_pi(r.mid_mut(), MPFR_RNDN);
    r.bump_rounding(t);
    return r;
}

constexpr long long kExactFactorialLimit = 100000;

}  // namespace

double d_value(DConstant v)
{
    return v == DConstant::c017 ? 0.17 : 0.174;
}

Ball s_func(int n, int k, mpfr_prec_t prec)
{
    if (n < 2 || k < n) throw std::domain_error("s_func: need k >= n >= 2");
    Ball lg = log_si(n + k, prec);
    return bsi(n + k, prec) * lg * lg;
}

double s_func_d(int n, int k)
{
    if (n < 2 || k < n) throw std::domain_error("s_func: need k >= n >= 2");
    double lg = std::log(static_cast<double>(n + k));
    return (n + k) * lg * lg;
}

bool theorem_hypothesis(int n, int k, double logH)
{
    Ball s = s_func(n, k);
    Ball threshold = s * Ball::exp(s);
    return Ball::from_double(logH).mid_double() >= threshold.mid_double() &&
           !Ball::certainly_less(Ball::from_double(logH), threshold);
}

Ball q_func(long long ell, int n, int k, mpfr_prec_t prec)
{
    if (ell < 2) throw std::domain_error("q_func: need ell >= 2");
    Ball l = bsi(ell, prec);
    Ball logl = Ball::log(l);
    if (k == 2) {
        return bsi(2, prec) * l * logl +
               l * (brat(rc(3377257, 1000000), prec) + bsi(2, prec) * log_si(n, prec));
    }
    Ball lin = bsi(k, prec) * log_si(k, prec) + bsi(k, prec) * log_si(n, prec) +
               brat(rc(72, 100), prec) * bsi(k, prec) + brat(rc(3, 1000000), prec);
    return l * bsi(k, prec) * logl + l * lin;
}

Ball r_func(long long ell, int n, int k, mpfr_prec_t prec, DConstant variant)
{
    if (ell < 2) throw std::domain_error("r_func: need ell >= 2");
    Ball l = bsi(ell, prec);
    Ball logl = Ball::log(l);
    if (k == 2) {
        return l * logl + brat(rc(64, 100), prec) * l;
    }
    Rational dconst = variant == DConstant::c017 ? rc(17, 100) : rc(174, 1000);
    Ball lin = bsi(k, prec) * log_si(k, prec) - brat(rc(81, 100), prec) * bsi(k, prec) -
               log_si(n, prec) + brat(dconst, prec);
    return l * logl - l * lin;
}

double z_inverse(double y)
{
    if (!(y >= 0)) throw std::domain_error("z_inverse: need y >= 0");
    if (y == 0) return 1.0;
    double lo = 1.0;
    double hi = std::max(std::exp(1.0), y);
    // z log z is increasing on [1, inf) and reaches y by z = max(e, y)
    for (int i = 0; i < 64; ++i) {
        double m = 0.5 * (lo + hi);
        if (m * std::log(m) < y)
            lo = m;
        else
            hi = m;
    }
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        double f = z * std::log(z) - y;
        double step = f / (std::log(z) + 1.0);
        z -= step;
        if (z < 1.0) z = 1.0;
    }
    return z;
}

Ball z_inverse_ball(const Ball& y, mpfr_prec_t prec)
{
    ensure_mpfr_range();
    // Newton at the midpoint, then a rigorous enclosure from the residual:
    // on [1, inf) the derivative log z + 1 is >= 1, so
    // |z* - z0| <= |z0 log z0 - y_mid| + rad(y).
    Ball z(prec);
    double seed = z_inverse(std::max(0.0, Ball(y).mid_double()));
    if (!std::isfinite(seed)) seed = 1.0;
    mpfr_set_d(z.mid_mut(), seed, MPFR_RNDN);

    mpfr_t f, lg, dz;
    mpfr_init2(f, prec);
    mpfr_init2(lg, prec);
    mpfr_init2(dz, prec);
    for (int i = 0; i < 64; ++i) {
        mpfr_log(lg, z.mid(), MPFR_RNDN);
        mpfr_mul(f, z.mid(), lg, MPFR_RNDN);
        mpfr_sub(f, f, y.mid(), MPFR_RNDN);
        mpfr_add_ui(lg, lg, 1, MPFR_RNDN);
        mpfr_div(dz, f, lg, MPFR_RNDN);
        mpfr_sub(z.mid_mut(), z.mid(), dz, MPFR_RNDN);
        if (mpfr_cmp_ui(z.mid(), 1) < 0) mpfr_set_ui(z.mid_mut(), 1, MPFR_RNDN);
        if (mpfr_zero_p(dz)) break;
        if (!mpfr_zero_p(z.mid()) &&
            mpfr_get_exp(dz) < mpfr_get_exp(z.mid()) - prec) break;
    }
    mpfr_clear(f);
    mpfr_clear(lg);
    mpfr_clear(dz);

    // residual-based radius
    Ball z_exact = z;  // zero radius midpoint
    Ball resid = z_exact * Ball::log(z_exact) - y;
    Ball out = z_exact;
    mpfr_t r;
    mpfr_init2(r, Ball::kRadiusPrec);
    resid.abs().upper(r);
    mpfr_add(out.rad_mut(), out.rad_mut(), r, MPFR_RNDU);
    mpfr_clear(r);
    return out;
}

BoundParams BoundParams::compute(int n, int k, mpfr_prec_t prec, DConstant variant)
{
    if (n < 2 || k < n) throw std::domain_error("BoundParams: need k >= n >= 2");
    BoundParams p;
    p.n = n;
    p.k = k;
    p.variant = variant;
    p.a = bsi(k, prec);
    p.c = bsi(1, prec);
    if (k == 2) {
        p.b = brat(rc(3377257, 1000000), prec) + bsi(2, prec) * log_si(n, prec);
        p.d = -brat(rc(64, 100), prec);
    } else {
        p.b = bsi(k, prec) * log_si(k, prec) + bsi(k, prec) * log_si(n, prec) +
              brat(rc(72, 100), prec) * bsi(k, prec) + brat(rc(3, 1000000), prec);
        Rational dconst = variant == DConstant::c017 ? rc(17, 100) : rc(174, 1000);
        p.d = bsi(k, prec) * log_si(k, prec) - brat(rc(81, 100), prec) * bsi(k, prec) -
              log_si(n, prec) + brat(dconst, prec);
    }
    p.s = s_func(n, k, prec);
    p.B = p.b + p.a * p.d / p.c;
    p.C = p.a;
    p.D = p.a + p.b + p.a * Ball::exp(-p.s);
    p.F = bsi(1, prec) / (bsi(2, prec) * Ball::exp(p.D));
    p.v = p.c - p.d / p.s;
    p.h1 = Ball::exp(p.s);
    p.u_factor = bsi(1, prec) + Ball::log(p.s) / p.s;
    return p;
}

EpsilonResult epsilon_H(const Ball& logH, const BoundParams& params, mpfr_prec_t prec)
{
    Ball log2H = logH + Ball::log(bsi(2, prec));
    Ball zz = z_inverse_ball(log2H / params.v, prec);
    EpsilonResult res;
    res.value = (params.B * zz + params.C * Ball::log(zz)) / log2H;
    Ball threshold = params.v * params.h1 * Ball::log(params.h1);
    res.hypothesis_satisfied = !Ball::certainly_less(log2H, threshold);
    return res;
}

double d_constant(int k)
{
    switch (k) {
        case 2: return 3.319;
        case 3: return 1.145;
        case 4: return 1.114;
        default:
            if (k < 2) throw std::domain_error("d_constant: need k >= 2");
            return 1.0 + 0.69 / (std::log(static_cast<double>(k)) - 1.0);
    }
}

double theta_constant(int k)
{
    switch (k) {
        case 2: return 0.744754115;
        case 3: return 0.04386773;
        case 4: return 0.00075786;
        case 5: return 0.00000412;
        case 6: return 7.976e-9;
        default:
            if (k < 2) throw std::domain_error("theta_constant: need k >= 2");
            return 1e-8;
    }
}

OmegaResult omega_theorem(int k, const Ball& logH, int n, mpfr_prec_t prec)
{
    if (k < 2) throw std::domain_error("omega_theorem: need k >= 2");
    if (!Ball::certainly_less(bsi(1, prec), logH))
        throw std::domain_error("omega_theorem: need log H > 1 (log log H positive)");
    Ball llH = Ball::log(logH);
    Ball dk = Ball::from_double(d_constant(k), prec);
    OmegaResult res;
    res.value = bsi(k, prec) +
                bsi(k, prec) * bsi(k, prec) * log_si(k, prec) * dk / llH;
    Ball s = s_func(n, k, prec);
    Ball threshold = s * Ball::exp(s);
    res.hypothesis_satisfied = !Ball::certainly_less(logH, threshold);
    return res;
}

double omega_theorem_d(int k, double logH)
{
    if (k < 2) throw std::domain_error("omega_theorem: need k >= 2");
    if (!(logH > 1.0))
        throw std::domain_error("omega_theorem: need log H > 1 (log log H positive)");
    double lk = std::log(static_cast<double>(k));
    return k + k * static_cast<double>(k) * lk * d_constant(k) / std::log(logH);
}

double f_func(int n, int k, double theta)
{
    if (k < 3 || n < 2 || n > k) throw std::domain_error("f_func: need 3 <= k, 2 <= n <= k");
    double lk = std::log(static_cast<double>(k));
    double lkn = std::log(static_cast<double>(k + n));
    double num = 1.0 + 1.0 / k + 0.89 / (k * lk) + (0.000003 + theta) / (k * k * lk) -
                 0.81 / lk + 1.0 / ((k + n) * lkn) +
                 2.0 * std::log(lkn) / ((k + n) * lkn * lkn);
    double den = 1.0 - k * lk / ((k + n) * lkn * lkn) + 0.81 * k / ((k + n) * lkn * lkn);
    return num / den;
}

namespace {

// Grid scan followed by golden-section refinement around the best cell.
// The products below have up to k interior humps; the dense scan picks the
// right hump, the refinement polishes it.
double grid_golden_argmax(const std::function<double(double)>& f, double lo, double hi)
{
    constexpr int kGridPoints = 100000;
    double best = -1.0;
    double besty = lo;
    const double h = (hi - lo) / kGridPoints;
    for (int i = 0; i <= kGridPoints; ++i) {
        double y = lo + i * h;
        double v = f(y);
        if (v > best) {
            best = v;
            besty = y;
        }
    }
    double a = std::max(lo, besty - h);
    double b = std::min(hi, besty + h);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    for (int i = 0; i < 200 && (b - a) > 1e-15; ++i) {
        if (f(c) < f(d))
            a = c;
        else
            b = d;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return 0.5 * (a + b);
}

// |prod_{s=0}^{top} (s/n - y)| evaluated as a ball at an exact double point.
Ball product_ball_at(int n, int top, double y, mpfr_prec_t prec)
{
    Ball yb = Ball::from_double(y, prec);
    Ball acc = bsi(1, prec);
    for (int s = 0; s <= top; ++s) {
        acc = acc * (brat(rc(s, n), prec) - yb);
    }
    return acc.abs();
}

double product_d(int n, int top, double y)
{
    double acc = 1.0;
    for (int s = 0; s <= top; ++s) acc *= (static_cast<double>(s) / n - y);
    return std::fabs(acc);
}

}  // namespace

Ball c_small_max(int n, int k, mpfr_prec_t prec)
{
    if (n < 2 || k < 2) throw std::domain_error("c_small_max: need n >= 2, k >= 2");
    double y = grid_golden_argmax([n, k](double t) { return product_d(n, k, t); }, 0.0, 1.0);
    return product_ball_at(n, k, y, prec);
}

Ball c_n_max(int n, mpfr_prec_t prec)
{
    if (n < 2) throw std::domain_error("c_n_max: need n >= 2");
    double y = grid_golden_argmax([n](double t) { return product_d(n, 5, t); }, 0.0, 1.0);
    Ball m = product_ball_at(n, 5, y, prec);
    if (Ball::certainly_less(bsi(1, prec), m))
        throw construction_error("c_n_max: maximum exceeds 1");
    return m;
}

Ball max_product_raw(int n, int k, mpfr_prec_t prec)
{
    if (n < 2 || k < 2) throw std::domain_error("max_product_raw: need n >= 2, k >= 2");
    double hi = static_cast<double>(k) / n;
    double y = grid_golden_argmax([n, k](double t) { return product_d(n, k, t); }, 0.0, hi);
    return product_ball_at(n, k, y, prec);
}

Ball max_product_bound(int n, int k, mpfr_prec_t prec)
{
    if (n < 2 || k < 2) throw std::domain_error("max_product_bound: need n >= 2, k >= 2");
    Ball bound(prec);
    if (k == 2) {
        // 2 / (3 sqrt(3) n^3), attained at y = (1 +- 1/sqrt(3)) / n
        bound = bsi(2, prec) /
                (bsi(3, prec) * Ball::sqrt(bsi(3, prec)) *
                 brat(Rational(pow_int(Int(n), 3)), prec));
    } else {
        bound = brat(make_rational(factorial(static_cast<unsigned long>(k)),
                                   Int(6) * pow_int(Int(n), static_cast<unsigned long>(k) + 1)),
                     prec);
    }
    Ball raw = max_product_raw(n, k, prec);
    if (Ball::certainly_less(bound, raw))
        throw construction_error("max_product_bound: raw maximum exceeds the bound");
    return bound;
}

Ball gamma_tail_series(const Rational& c, int k, long long ell, mpfr_prec_t prec)
{
    if (c <= 1) throw std::domain_error("gamma_tail_series: need c > 1");
    if (k < 0 || ell < 1) throw std::domain_error("gamma_tail_series: need k >= 0, ell >= 1");
    const long long T = ell * (static_cast<long long>(k) + 1);
    if (T > 200000) throw std::domain_error("gamma_tail_series: T too large for the exact series");

    const Rational a = c * Rational(static_cast<long>(T));
    // S = sum_{m=0}^{T-1} (T-1)!/(T-1-m)! a^{T-1-m}; the tail integral is e^{-a} S
    Rational term = pow_rational(a, static_cast<unsigned long>(T - 1));
    Rational S(0);
    for (long long m = 0; m < T; ++m) {
        S += term;
        if (m + 1 < T) term = term * Rational(static_cast<long>(T - 1 - m)) / a;
    }
    // geometric-series bound S <= a^{T-1} c/(c-1)
    Rational cap = pow_rational(a, static_cast<unsigned long>(T - 1)) * c / (c - Rational(1));
    if (S > cap) throw construction_error("gamma_tail_series: series exceeds its bound");

    return Ball::exp(-brat(a, prec)) * brat(S, prec);
}

Ball a_u0_bound(int k, long long ell, mpfr_prec_t prec)
{
    if (k < 2 || ell < 2) throw std::domain_error("a_u0_bound: need k >= 2, ell >= 2");
    const long long T = ell * (static_cast<long long>(k) + 1);
    Ball tb = bsi(T, prec);
    return log_si(4, prec) + tb * log_si(2, prec) +
           (tb - bsi(1, prec)) * Ball::log(tb) - tb + bsi(1, prec);
}

Ball sum_L_bound(int n, int k, long long ell, mpfr_prec_t prec)
{
    if (n < 2 || k < 2 || ell < 2)
        throw std::domain_error("sum_L_bound: need n >= 2, k >= 2, ell >= 2");
    Ball log_ck(prec);
    if (k == 2) {
        log_ck = log_si(3, prec) + log_si(3, prec) / bsi(2, prec);  // log(3 sqrt 3)
    } else {
        log_ck = log_si(6, prec);
    }
    Ball l = bsi(ell, prec);
    return l * log_factorial(k, prec) - (l - bsi(1, prec)) * log_ck -
           log_factorial(ell - 1, prec) + (bsi(2, prec) - l) * log_si(n, prec) +
           brat(rc(k + 1, n), prec);
}

Ball log_factorial(long long m, mpfr_prec_t prec)
{
    if (m < 0) throw std::domain_error("log_factorial: negative argument");
    if (m <= 1) return Ball(prec);
    if (m <= kExactFactorialLimit) {
        return Ball::log_abs_int(factorial(static_cast<unsigned long>(m)), prec);
    }
    // sqrt(2 pi m) (m/e)^m e^{1/(12m+1)} < m! < sqrt(2 pi m) (m/e)^m e^{1/(12m)}
    Ball mb = bsi(m, prec);
    Ball base = (Ball::log(bsi(2, prec) * pi_ball(prec) * mb)) / bsi(2, prec) +
                mb * Ball::log(mb) - mb;
    Ball corr = Ball::hull(brat(make_rational(Int(1), Int(12) * Int(static_cast<long>(m)) + 1), prec),
                           brat(make_rational(Int(1), Int(12) * Int(static_cast<long>(m))), prec));
    return base + corr;
}

}  // namespace eroot
