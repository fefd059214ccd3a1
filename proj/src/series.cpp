#include "eroot/series.hpp"

namespace eroot {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, long order)
    : coeffs_(std::move(coeffs)), order_(order)
{
    if (order_ < 0) throw std::domain_error("TruncatedSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order_) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(long order)
{
    return TruncatedSeries({}, order);
}

TruncatedSeries TruncatedSeries::of_polynomial(const Polynomial& p, long order)
{
    std::vector<Rational> c(p.coefficients());
    c.resize(static_cast<size_t>(order) + 1, Rational(0));
    c.resize(static_cast<size_t>(order) + 1);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const
{
    long ord = std::min(order_, other.order_);
    std::vector<Rational> out(static_cast<size_t>(ord) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(ord); ++i)
        out[i] = coeffs_[i] + other.coeffs_[i];
    return TruncatedSeries(std::move(out), ord);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const
{
    long ord = std::min(order_, other.order_);
    std::vector<Rational> out(static_cast<size_t>(ord) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(ord); ++i)
        out[i] = coeffs_[i] - other.coeffs_[i];
    return TruncatedSeries(std::move(out), ord);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    long ord = std::min(order_, other.order_);
    std::vector<Rational> out(static_cast<size_t>(ord) + 1, Rational(0));
    for (size_t i = 0; i <= static_cast<size_t>(ord); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (size_t j = 0; i + j <= static_cast<size_t>(ord); ++j) {
            if (sgn(other.coeffs_[j]) == 0) continue;
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return TruncatedSeries(std::move(out), ord);
}

TruncatedSeries series_of_exp(const Rational& alpha, long order)
{
    if (order < 0) throw std::domain_error("series_of_exp: negative order");
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    for (long i = 1; i <= order; ++i) {
        c[static_cast<size_t>(i)] =
            c[static_cast<size_t>(i - 1)] * alpha / Rational(i);
    }
    return TruncatedSeries(std::move(c), order);
}

Ball real_exp_fraction(long j, long n, mpfr_prec_t precision_bits)
{
    if (j < 1 || n < 1) throw std::domain_error("real_exp_fraction: need j >= 1, n >= 1");
    if (precision_bits < 16) throw std::domain_error("real_exp_fraction: precision_bits >= 16 required");
    Ball arg = Ball::from_rational(make_rational(j, n), precision_bits + 8);
    return Ball::exp(arg);
}

}  // namespace eroot
