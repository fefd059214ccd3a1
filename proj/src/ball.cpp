#include "eroot/ball.hpp"

#include <cmath>

namespace eroot {

void ensure_mpfr_range()
{
    thread_local const bool done = [] {
        mpfr_set_emin(mpfr_get_emin_min());
        mpfr_set_emax(mpfr_get_emax_max());
        return true;
    }();
    (void)done;
}

namespace {

// Scratch mpfr value with automatic cleanup.
struct Tmp {
    mpfr_t v;
    explicit Tmp(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Tmp() { mpfr_clear(v); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
};

// One ulp of x at its own precision; a safe overestimate of the
// round-to-nearest error.  For a zero/underflowed midpoint fall back to
// the smallest representable magnitude.
void add_ulp(mpfr_t rad, const mpfr_t x)
{
    Tmp u(Ball::kRadiusPrec);
    if (mpfr_zero_p(x)) {
        mpfr_set_ui_2exp(u.v, 1, mpfr_get_emin() + 16, MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(u.v, 1, mpfr_get_exp(x) - mpfr_get_prec(x), MPFR_RNDU);
    }
    mpfr_add(rad, rad, u.v, MPFR_RNDU);
}

}  // namespace

Ball::Ball(mpfr_prec_t prec)
{
    ensure_mpfr_range();
    if (prec < MPFR_PREC_MIN) prec = MPFR_PREC_MIN;
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other)
{
    ensure_mpfr_range();
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept
{
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other)
{
    if (this != &other) {
        mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
        mpfr_set(mid_, other.mid_, MPFR_RNDN);
        mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(mid_, other.mid_);
        mpfr_swap(rad_, other.rad_);
    }
    return *this;
}

Ball::~Ball()
{
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Ball::bump_rounding(int ternary)
{
    if (ternary != 0) add_ulp(rad_, mid_);
}

Ball Ball::from_si(long v, mpfr_prec_t prec)
{
    Ball r(prec);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_rounding(t);
    return r;
}

Ball Ball::from_double(double v, mpfr_prec_t prec)
{
    Ball r(prec);
    int t = mpfr_set_d(r.mid_, v, MPFR_RNDN);
    r.bump_rounding(t);
    return r;
}

Ball Ball::from_int(const Int& v, mpfr_prec_t prec)
{
    Ball r(prec);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_rounding(t);
    return r;
}

Ball Ball::from_rational(const Rational& v, mpfr_prec_t prec)
{
    Ball r(prec);
    int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
    r.bump_rounding(t);
    return r;
}

Ball operator+(const Ball& a, const Ball& b)
{
    ensure_mpfr_range();
    Ball r(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball operator-(const Ball& a, const Ball& b)
{
    ensure_mpfr_range();
    Ball r(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball operator*(const Ball& a, const Ball& b)
{
    ensure_mpfr_range();
    Ball r(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);

    // |a.mid| * b.rad + |b.mid| * a.rad + a.rad * b.rad, all rounded up
    Tmp am(Ball::kRadiusPrec), bm(Ball::kRadiusPrec), acc(Ball::kRadiusPrec);
    mpfr_abs(am.v, a.mid_, MPFR_RNDU);
    mpfr_abs(bm.v, b.mid_, MPFR_RNDU);
    mpfr_mul(acc.v, am.v, b.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, acc.v, MPFR_RNDU);
    mpfr_mul(acc.v, bm.v, a.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
    mpfr_mul(acc.v, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball operator/(const Ball& a, const Ball& b)
{
    ensure_mpfr_range();
    if (b.contains_zero())
        throw insufficient_precision("ball division: divisor ball contains zero");
    Ball r(std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_)));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);

    // |a/b - a.mid/b.mid| <= (a.rad + |mid| * b.rad) / (|b.mid| - b.rad)
    Tmp denom(Ball::kRadiusPrec), num(Ball::kRadiusPrec), m(Ball::kRadiusPrec);
    mpfr_abs(denom.v, b.mid_, MPFR_RNDD);
    mpfr_sub(denom.v, denom.v, b.rad_, MPFR_RNDD);
    mpfr_abs(m.v, r.mid_, MPFR_RNDU);
    mpfr_mul(num.v, m.v, b.rad_, MPFR_RNDU);
    mpfr_add(num.v, num.v, a.rad_, MPFR_RNDU);
    mpfr_div(r.rad_, num.v, denom.v, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball Ball::operator-() const
{
    Ball r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
    return r;
}

Ball Ball::abs() const
{
    Ball r(*this);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);  // exact
    return r;
}

Ball Ball::mul_int(const Int& z) const
{
    ensure_mpfr_range();
    Ball r(precision());
    int t = mpfr_mul_z(r.mid_, mid_, z.get_mpz_t(), MPFR_RNDN);
    Tmp zf(kRadiusPrec);
    mpfr_set_z(zf.v, z.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(zf.v, zf.v, MPFR_RNDU);
    mpfr_mul(r.rad_, rad_, zf.v, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball Ball::add_int(const Int& z) const
{
    ensure_mpfr_range();
    Ball r(precision());
    int t = mpfr_add_z(r.mid_, mid_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball Ball::exp(const Ball& x)
{
    ensure_mpfr_range();
    Ball r(x.precision());
    int t = mpfr_exp(r.mid_, x.mid_, MPFR_RNDN);

    // |exp(x) - exp(m)| <= rad * exp(m + rad) for |x - m| <= rad
    Tmp hi(kRadiusPrec);
    mpfr_add(hi.v, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_exp(hi.v, hi.v, MPFR_RNDU);
    mpfr_mul(r.rad_, x.rad_, hi.v, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball Ball::log(const Ball& x)
{
    ensure_mpfr_range();
    Tmp lo(kRadiusPrec);
    mpfr_set(lo.v, x.mid_, MPFR_RNDD);
    mpfr_sub(lo.v, lo.v, x.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.v) <= 0)
        throw insufficient_precision("ball log: argument not certainly positive");
    Ball r(x.precision());
    int t = mpfr_log(r.mid_, x.mid_, MPFR_RNDN);

    // sup |1/t| on the ball is 1 / (m - rad)
    mpfr_div(lo.v, x.rad_, lo.v, MPFR_RNDU);
    mpfr_set(r.rad_, lo.v, MPFR_RNDU);
    r.bump_rounding(t);
    return r;
}

Ball Ball::sqrt(const Ball& x)
{
    ensure_mpfr_range();
    Tmp lo(kRadiusPrec);
    mpfr_set(lo.v, x.mid_, MPFR_RNDD);
    mpfr_sub(lo.v, lo.v, x.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.v) < 0)
        throw insufficient_precision("ball sqrt: argument not certainly nonnegative");
    Ball r(x.precision());
    int t = mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN);

    if (mpfr_sgn(lo.v) == 0) {
        // containment via |sqrt(x) - sqrt(m)| <= sqrt(rad) near zero
        mpfr_sqrt(lo.v, x.rad_, MPFR_RNDU);
        mpfr_add(r.rad_, r.rad_, lo.v, MPFR_RNDU);
    } else {
        // derivative bound 1 / (2 sqrt(m - rad))
        mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
        mpfr_mul_ui(lo.v, lo.v, 2, MPFR_RNDD);
        mpfr_div(lo.v, x.rad_, lo.v, MPFR_RNDU);
        mpfr_set(r.rad_, lo.v, MPFR_RNDU);
    }
    r.bump_rounding(t);
    return r;
}

Ball Ball::pow_ui(const Ball& x, unsigned long e)
{
    Ball acc = Ball::from_si(1, x.precision());
    Ball base = x;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

Ball Ball::hull(const Ball& a, const Ball& b)
{
    ensure_mpfr_range();
    const mpfr_prec_t prec = std::max(mpfr_get_prec(a.mid_), mpfr_get_prec(b.mid_));
    Tmp lo(prec), hi(prec), t(prec);
    a.lower(lo.v);
    b.lower(t.v);
    if (mpfr_cmp(t.v, lo.v) < 0) mpfr_set(lo.v, t.v, MPFR_RNDD);
    a.upper(hi.v);
    b.upper(t.v);
    if (mpfr_cmp(t.v, hi.v) > 0) mpfr_set(hi.v, t.v, MPFR_RNDU);

    Ball r(prec);
    mpfr_add(r.mid_, lo.v, hi.v, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    // radius covering both endpoints from the rounded midpoint
    Tmp d1(Ball::kRadiusPrec), d2(Ball::kRadiusPrec);
    mpfr_sub(d1.v, hi.v, r.mid_, MPFR_RNDU);
    mpfr_sub(d2.v, r.mid_, lo.v, MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) < 0) mpfr_set(d1.v, d2.v, MPFR_RNDU);
    mpfr_set(r.rad_, d1.v, MPFR_RNDU);
    add_ulp(r.rad_, r.mid_);
    return r;
}

Ball Ball::log_abs_int(const Int& z, mpfr_prec_t prec)
{
    if (sgn(z) == 0) throw std::domain_error("log_abs_int: zero argument");
    Ball v = Ball::from_int(::abs(z), prec);
    return Ball::log(v);
}

bool Ball::is_zero_width() const
{
    return mpfr_zero_p(rad_);
}

bool Ball::contains_zero() const
{
    Tmp a(kRadiusPrec);
    mpfr_abs(a.v, mid_, MPFR_RNDD);
    return mpfr_cmp(a.v, rad_) <= 0;
}

bool Ball::is_positive() const
{
    Tmp lo(kRadiusPrec);
    mpfr_set(lo.v, mid_, MPFR_RNDD);
    mpfr_sub(lo.v, lo.v, rad_, MPFR_RNDD);
    return mpfr_sgn(lo.v) > 0;
}

bool Ball::is_negative() const
{
    Tmp hi(kRadiusPrec);
    mpfr_set(hi.v, mid_, MPFR_RNDU);
    mpfr_add(hi.v, hi.v, rad_, MPFR_RNDU);
    return mpfr_sgn(hi.v) < 0;
}

bool Ball::certainly_less(const Ball& a, const Ball& b)
{
    Tmp ahi(Ball::kRadiusPrec + 64), blo(Ball::kRadiusPrec + 64);
    mpfr_set(ahi.v, a.mid_, MPFR_RNDU);
    mpfr_add(ahi.v, ahi.v, a.rad_, MPFR_RNDU);
    mpfr_set(blo.v, b.mid_, MPFR_RNDD);
    mpfr_sub(blo.v, blo.v, b.rad_, MPFR_RNDD);
    return mpfr_cmp(ahi.v, blo.v) < 0;
}

bool Ball::contains(const Ball& other) const
{
    // |mid - other.mid| + other.rad <= rad, evaluated conservatively
    Tmp d(kRadiusPrec);
    mpfr_sub(d.v, mid_, other.mid_, MPFR_RNDA);
    mpfr_abs(d.v, d.v, MPFR_RNDU);
    mpfr_add(d.v, d.v, other.rad_, MPFR_RNDU);
    return mpfr_cmp(d.v, rad_) <= 0;
}

double Ball::mid_double() const
{
    return mpfr_get_d(mid_, MPFR_RNDN);
}

double Ball::rad_double() const
{
    return mpfr_get_d(rad_, MPFR_RNDU);
}

double Ball::lower_double() const
{
    Tmp lo(kRadiusPrec + 64);
    mpfr_set(lo.v, mid_, MPFR_RNDD);
    mpfr_sub(lo.v, lo.v, rad_, MPFR_RNDD);
    return mpfr_get_d(lo.v, MPFR_RNDD);
}

double Ball::upper_double() const
{
    Tmp hi(kRadiusPrec + 64);
    mpfr_set(hi.v, mid_, MPFR_RNDU);
    mpfr_add(hi.v, hi.v, rad_, MPFR_RNDU);
    return mpfr_get_d(hi.v, MPFR_RNDU);
}

void Ball::lower(mpfr_t out) const
{
    mpfr_sub(out, mid_, rad_, MPFR_RNDD);
}

void Ball::upper(mpfr_t out) const
{
    mpfr_add(out, mid_, rad_, MPFR_RNDU);
}

std::string Ball::mid_string(size_t digits) const
{
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::rad_string() const
{
    char* s = nullptr;
    mpfr_asprintf(&s, "%.6Re", rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace eroot
