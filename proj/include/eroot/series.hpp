#pragma once

#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"
#include "eroot/polynomial.hpp"

namespace eroot {

// Power series truncated at a fixed order: exactly order+1 coefficients,
// index = power of t.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rational> coeffs, long order);
    static TruncatedSeries zero(long order);
    static TruncatedSeries of_polynomial(const Polynomial& p, long order);

    long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& coefficient(size_t i) const { return coeffs_.at(i); }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

private:
    std::vector<Rational> coeffs_;
    long order_;
};

// Exact truncation of e^{alpha t}: coefficient of t^i is alpha^i / i!.
TruncatedSeries series_of_exp(const Rational& alpha, long order);

// Ball containing e^{j/n}, radius at most 2^{-precision_bits+4} * e^{j/n}.
// Requires j >= 1, n >= 1, precision_bits >= 16.
Ball real_exp_fraction(long j, long n, mpfr_prec_t precision_bits);

}  // namespace eroot
