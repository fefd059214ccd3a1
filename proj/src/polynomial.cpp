#include "eroot/polynomial.hpp"

namespace eroot {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    if (sgn(c) == 0) return Polynomial();
    return Polynomial({c});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(size_t i) const
{
    if (i >= coeffs_.size()) return Rational(0);
    return coeffs_[i];
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    if (sgn(factor) == 0) return Polynomial();
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= factor;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_scale(const Rational& c) const
{
    std::vector<Rational> out(coeffs_);
    Rational p(1);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] *= p;
        p *= c;
    }
    return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Ball Polynomial::evaluate_ball(const Ball& x, mpfr_prec_t prec) const
{
    Ball acc(prec);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + Ball::from_rational(coeffs_[i], prec);
    }
    return acc;
}

Int IntPolynomial::evaluate_one() const
{
    Int acc(0);
    for (const auto& c : coeffs) acc += c;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + Rational(coeffs[i]);
    }
    return acc;
}

}  // namespace eroot
