#pragma once

#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"

namespace eroot {

// Outcome of an exhaustive minimization of |lambda_0 + lambda_1 e^{1/n} +
// ... + lambda_k e^{k/n}| over integer vectors with |lambda_i| <= H for
// i = 1..k.  lambda_0 ranges over all integers (the minimizing choice is
// the nearest integer to -sum) unless lambda0_bounded is set.
struct CertificateRecord {
    int n = 0;
    int k = 0;
    long long H = 0;
    Ball min_value;
    std::vector<long long> argmin;  // lambda_0 .. lambda_k, leading nonzero of 1..k positive
    double empirical_omega = 0;     // -log(min)/log(H); NaN for H < 3
    double theorem_omega = 0;       // NaN unless filled by certify_against_theorem
    bool hypothesis_satisfied = false;
    bool verdict = false;           // min > H^{-theorem_omega}, when certified
    unsigned long long tuples_scanned = 0;
    double wall_time_ms = 0;
    mpfr_prec_t precision_bits = 0;
    bool lambda0_bounded = false;
};

// Exhaustive scan.  The (lambda_1..lambda_k) grid is halved by the global
// sign symmetry (leading nonzero entry positive); a double-precision
// prefilter with a proven error budget selects the near-minimal tuples,
// which are then re-evaluated in ball arithmetic.  The reported minimum is
// separated from zero and from the runner-up, escalating the working
// precision (x2) up to the ceiling.
//
// precision_bits = 0 selects the default 64 + ceil(4 k log H).
CertificateRecord min_linear_form(int n, int k, long long H,
                                  mpfr_prec_t precision_bits = 0, int jobs = 1,
                                  bool lambda0_bounded = false);

// min_linear_form plus the comparison against H^{-omega(k,H)}.  Requires
// H >= 3 so that log log H is positive.  At desk scale the theorem's
// hypothesis log H >= s e^s is never satisfied; the flag reports that
// honestly while the verdict records the (expected, much weaker) fact
// min > H^{-omega}.
CertificateRecord certify_against_theorem(int n, int k, long long H,
                                          mpfr_prec_t precision_bits = 0, int jobs = 1,
                                          bool lambda0_bounded = false);

// One certified record per H value (all H >= 3).
std::vector<CertificateRecord> empirical_omega_curve(int n, int k,
                                                     const std::vector<long long>& Hs,
                                                     mpfr_prec_t precision_bits = 0,
                                                     int jobs = 1,
                                                     bool lambda0_bounded = false);

}  // namespace eroot
