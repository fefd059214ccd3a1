#pragma once

#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"

namespace eroot {

// Dense univariate polynomial over exact rationals.  Coefficient i is the
// coefficient of x^i.  The zero polynomial is the empty coefficient list;
// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);

    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(size_t i) const;  // 0 beyond the stored range

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& factor) const;

    // p(c * x): coefficient i gets multiplied by c^i
    Polynomial compose_scale(const Rational& c) const;

    Rational evaluate(const Rational& x) const;
    Ball evaluate_ball(const Ball& x, mpfr_prec_t prec) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Dense polynomial with exact integer coefficients (the normalized
// approximants live here).
struct IntPolynomial {
    std::vector<Int> coeffs;  // index = power

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    Int evaluate_one() const;  // sum of coefficients
    Rational evaluate(const Rational& x) const;
};

}  // namespace eroot
