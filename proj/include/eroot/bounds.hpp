#pragma once

#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"

namespace eroot {

// Which constant to use in the linear-form decay exponent r(ell) for
// k >= 3: the lemma statement and the parameter list disagree (0.174 vs
// 0.17), so both are evaluable.
enum class DConstant { c017, c0174 };

double d_value(DConstant v);

// s(n,k) = (k+n) (log(k+n))^2.  Requires k >= n >= 2.
Ball s_func(int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);
double s_func_d(int n, int k);

// Hypothesis of the main estimate: log H >= s e^s.
bool theorem_hypothesis(int n, int k, double logH);

// Growth exponent of the normalized |A*_{u,0}(1)|:
//   k >= 3:  ell k log ell + ell (k log k + k log n + 0.72 k + 0.000003)
//   k  = 2:  2 ell log ell + ell (3.377257 + 2 log n)
Ball q_func(long long ell, int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// Decay exponent of sum_j |L*_{u,j}(1)| (the sum is <= e^{-r}):
//   k >= 3:  ell log ell - ell (k log k - 0.81 k - log n + d)
//   k  = 2:  ell log ell + 0.64 ell
Ball r_func(long long ell, int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec,
            DConstant variant = DConstant::c017);

// Inverse of y = z log z on [1, inf): |z log z - y| <= 1e-12 max(1, y).
double z_inverse(double y);
Ball z_inverse_ball(const Ball& y, mpfr_prec_t prec = Ball::kDefaultPrec);

// The scalar chain entering the linear-form lower bound.
struct BoundParams {
    int n = 0;
    int k = 0;
    DConstant variant = DConstant::c017;
    Ball a, b, c, d;
    Ball s;
    Ball B, C, D, F, v, h1, u_factor;

    static BoundParams compute(int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec,
                               DConstant variant = DConstant::c017);
};

struct EpsilonResult {
    Ball value;
    bool hypothesis_satisfied = false;  // log(2H) >= v h1 log h1
};

// epsilon(H) = [B z(log(2H)/v) + C log z(log(2H)/v)] / log(2H).
EpsilonResult epsilon_H(const Ball& logH, const BoundParams& params,
                        mpfr_prec_t prec = Ball::kDefaultPrec);

// d(k): 3.319, 1.145, 1.114 for k = 2, 3, 4; 1 + 0.69/(log k - 1) beyond.
double d_constant(int k);

// theta(k): the per-k additive constant absorbed next to B.
double theta_constant(int k);

struct OmegaResult {
    Ball value;
    bool hypothesis_satisfied = false;  // log H >= s e^s at the given n
};

// omega(k, H) = k + (k^2 log k / log log H) d(k).
// Requires logH > 1 (log log H must be positive); throws std::domain_error.
OmegaResult omega_theorem(int k, const Ball& logH, int n = 2,
                          mpfr_prec_t prec = Ball::kDefaultPrec);
double omega_theorem_d(int k, double logH);

// Simplified quotient bounding Y / (k^2 log k); requires k >= 3, n <= k.
double f_func(int n, int k, double theta);

// Achieved maximum of prod_{s=0}^{k} |s/n - y| over [0,1]: a certified
// point value within 1e-6 of the true maximum (grid scan plus
// golden-section refinement).
Ball c_small_max(int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// Same product with s running to 5 regardless of k; checked <= 1.
Ball c_n_max(int n, mpfr_prec_t prec = Ball::kDefaultPrec);

// Achieved maximum of the same product over (0, k/n).
Ball max_product_raw(int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// Closed-form upper bound for that maximum: k!/(6 n^{k+1}) for k >= 3,
// 2/(3 sqrt(3) n^3) for k = 2.  Checks the raw maximization does not
// exceed it.
Ball max_product_bound(int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// Exact tail integral int_{c l (k+1)}^inf e^{-x} x^{l(k+1)-1} dx via the
// finite integration-by-parts series (c exact rational > 1), checked
// against the bound (c/(c-1)) e^{-cT} (cT)^{T-1} with T = l (k+1).
Ball gamma_tail_series(const Rational& c, int k, long long ell,
                       mpfr_prec_t prec = Ball::kDefaultPrec);

// log-scale bound on the unnormalized |A_{u,0}(1)|:
// log 4 + (k+1) l log 2 + (l(k+1) - 1) log((k+1) l) - l(k+1) + 1.
Ball a_u0_bound(int k, long long ell, mpfr_prec_t prec = Ball::kDefaultPrec);

// log of (k!)^l / (c(k)^{l-1} (l-1)!) n^{2-l} e^{(k+1)/n} with c(k) = 6
// for k >= 3 and 3 sqrt(3) for k = 2.
Ball sum_L_bound(int n, int k, long long ell, mpfr_prec_t prec = Ball::kDefaultPrec);

// Enclosure of log(m!): exact for small m, two-sided Stirling beyond.
Ball log_factorial(long long m, mpfr_prec_t prec = Ball::kDefaultPrec);

}  // namespace eroot
