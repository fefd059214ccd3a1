#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "eroot/numeric.hpp"

namespace eroot {

// Midpoint-radius real number: an MPFR midpoint at the working precision
// plus a low-precision, upward-rounded absolute error radius.
//
// Contract: after any sequence of operations the resulting ball contains
// the exact real value that would be produced by the same sequence on the
// exact inputs.  Radius updates always round up; derivative bounds for
// exp/log/sqrt are evaluated at the unfavourable end of the input ball.
class Ball {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 32;
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit Ball(mpfr_prec_t prec = kDefaultPrec);
    Ball(const Ball& other);
    Ball(Ball&& other) noexcept;
    Ball& operator=(const Ball& other);
    Ball& operator=(Ball&& other) noexcept;
    ~Ball();

    mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }

    // --- constructors from exact values -------------------------------
    static Ball from_si(long v, mpfr_prec_t prec = kDefaultPrec);
    static Ball from_double(double v, mpfr_prec_t prec = kDefaultPrec);
    static Ball from_int(const Int& v, mpfr_prec_t prec = kDefaultPrec);
    static Ball from_rational(const Rational& v, mpfr_prec_t prec = kDefaultPrec);

    // --- arithmetic ----------------------------------------------------
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);  // b must exclude 0
    Ball operator-() const;
    Ball abs() const;

    Ball mul_int(const Int& z) const;   // exact integer factor
    Ball add_int(const Int& z) const;

    static Ball exp(const Ball& x);
    static Ball log(const Ball& x);     // x must be certainly positive
    static Ball sqrt(const Ball& x);    // x must be certainly nonnegative
    static Ball pow_ui(const Ball& x, unsigned long e);

    // Smallest ball containing both arguments.
    static Ball hull(const Ball& a, const Ball& b);

    // ln |z| of an exact integer z != 0, at the ball's precision.
    static Ball log_abs_int(const Int& z, mpfr_prec_t prec = kDefaultPrec);

    // --- queries ---------------------------------------------------
    bool is_zero_width() const;
    bool contains_zero() const;
    bool is_positive() const;           // entire ball > 0
    bool is_negative() const;

    // Certain comparison: true only if every point of a < every point of b.
    static bool certainly_less(const Ball& a, const Ball& b);

    // True if this ball certainly contains the other ball entirely.
    bool contains(const Ball& other) const;

    double mid_double() const;
    double rad_double() const;

    // Signed endpoints, rounded outward, as doubles (may overflow to inf).
    double lower_double() const;
    double upper_double() const;

    // Decimal rendering of the midpoint (round-to-nearest) and radius.
    std::string mid_string(size_t digits = 20) const;
    std::string rad_string() const;

    // raw access for module internals
    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }
    mpfr_t& mid_mut() { return mid_; }
    mpfr_t& rad_mut() { return rad_; }

    // Outward-rounded endpoints at full precision into caller-owned mpfr_t.
    void lower(mpfr_t out) const;   // RNDD
    void upper(mpfr_t out) const;   // RNDU

    // Inflate the radius to account for a half-ulp rounding of the
    // midpoint (used after raw mpfr calls on mid_mut()).
    void bump_rounding(int ternary);

private:
    mpfr_t mid_;
    mpfr_t rad_;
};

// Widen MPFR's exponent range once per thread; all entry points call this.
void ensure_mpfr_range();

}  // namespace eroot
