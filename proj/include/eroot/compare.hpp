#pragma once

#include <string>
#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"

namespace eroot {

// C(r) = (k+1)^2 r sqrt(log(n+k+1) log r).
double mahler_C(double r, int n, int k);
Ball mahler_C_ball(const Ball& r, int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// Smallest integer r with (r-1)!/e^{2C(r-1)} <= max_coeff < r!/e^{2C(r)},
// located by upward search.  With the constants as stated the upper window
// r!/e^{2C(r)} stays far below 1 for every searchable r, so for any real
// coefficient bound the search exhausts its ceiling and throws
// search_exhausted; the comparison path falls back to the published
// bracket r ~ log x / log log x instead.
long long mahler_r(const Int& max_coeff, int n, int k, long long ceiling = 2000000);

// True if log x / log log x < r < 6 log x / log log x.
bool mahler_bracket_contains(double r, double log_x);

// Exponent rho such that the Mahler lower bound reads H^{-rho} for the
// worst-case coefficient family H/2 <= |lambda_i| <= H:
//   rho = k - k log 2 / log H + (2(k+1) - 1/4) C(r) / log H,
// with r = log H / log log H (the bracket translation).  logH may be
// astronomically large; everything stays in extended-exponent balls.
Ball mahler_exponent(const Ball& logH, int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

// The fully asymptotic shape k + 2 (k+1)^2 sqrt(log k / log log H).
Ball mahler_exponent_heuristic(const Ball& log_logH, int n, int k,
                               mpfr_prec_t prec = Ball::kDefaultPrec);

// EHLM worst-case exponent:
//   k + c_k k^2 sqrt(log(n+k)) / sqrt(log log M) - k log 2 / log M,
// with c_k = 13 for k < 3 and 12 otherwise.
Ball ehlm_exponent(const Ball& logM, int n, int k, mpfr_prec_t prec = Ball::kDefaultPrec);

int ehlm_ck(int k);

struct ComparisonRow {
    int n = 0;
    int k = 0;
    double log_logH = 0;
    double exp_this_paper = 0;
    double exp_mahler = 0;
    double exp_mahler_heuristic = 0;
    double exp_ehlm = 0;
    bool hypothesis_satisfied = false;  // for the this-work exponent
    std::string winner;
};

// One row per log log H value.  All exponents exceed k; for large
// log log H the first column wins.
std::vector<ComparisonRow> compare_report(int n, int k,
                                          const std::vector<double>& log_logH_values,
                                          mpfr_prec_t prec = Ball::kDefaultPrec);

}  // namespace eroot
