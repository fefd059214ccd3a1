#pragma once

#include <string>
#include <vector>

#include "eroot/bounds.hpp"
#include "eroot/numeric.hpp"

namespace eroot {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

struct GridSpec {
    // (n, k) pairs with n in {2,3}, k in {n..5} by default
    std::vector<std::pair<int, int>> nk;
    long ell_lo = 2;
    long ell_hi = 8;

    static GridSpec default_grid();
};

// How to check the first nonzero remainder coefficient.  At the
// reflection-symmetric combinations (j = k, k even, u = k/2) with odd L
// the t^{L+1} coefficient equals int_0^{k/n} Omega = 0 identically, and
// the first nonzero coefficient sits at L+2.  The lemma mode accepts
// exactly that; the strict mode demands a nonzero coefficient at L+1
// everywhere and therefore fails at those points.
enum class RemainderOrderCheck { strict_L_plus_1, lemma };

// True at the combinations where the t^{L+1} coefficient of the remainder
// vanishes by antisymmetry.
bool remainder_symmetric_point(int k, int u, int j, long ell);

// Exact structural checks over the grid: integrality of the normalized
// family, degree law, remainder order, nonzero determinant, and the
// multinomial closed form against the expanded coefficients.
std::vector<CheckResult> structural_suite(const GridSpec& grid, int jobs = 1,
                                          DConstant variant = DConstant::c017,
                                          RemainderOrderCheck mode = RemainderOrderCheck::lemma);

// Product-maximum table checks plus c(n) <= 1.  The table values are what
// the decay lemmas consume, so the load-bearing direction is computed <=
// table; the 0.9 reproduction band is a tightness probe used by the
// acceptance suite.
std::vector<CheckResult> maxima_table_suite(mpfr_prec_t prec = Ball::kDefaultPrec,
                                            bool reproduction_band = true);

// max over (0, k/n) against k!/(6 n^{k+1}) (k >= 3) and the exact k = 2 value.
std::vector<CheckResult> max_product_suite(mpfr_prec_t prec = Ball::kDefaultPrec);

// Scalar identities tying the final exponent to its derivation, and the
// f(n,k) table and sweep.
std::vector<CheckResult> theorem_consistency_suite();

// Exact large-ell check at (n,k) = (2,2): log |A*_{u,0}(1)| <= q(ell) and
// sum_j |L*_{u,j}(1)| <= e^{-r(ell)} for every u, ball-certified.
std::vector<CheckResult> deep_bound_suite(long ell = 2200, mpfr_prec_t prec = 25000,
                                          int jobs = 1);

// Log-domain verification of each inequality step in the growth/decay
// derivations at one large ell (k >= 3).
std::vector<CheckResult> proof_chain_suite(int n, int k, long long ell,
                                           mpfr_prec_t prec = 256,
                                           DConstant variant = DConstant::c017);

// z log z round trip over a log-spaced grid up to 1e12, plus exact points.
std::vector<CheckResult> z_inverse_suite();

// Comparison ordering at (2,2) and (2,5), log log H in {1e3, 1e6}, and the
// decay of the correction-term ratios.
std::vector<CheckResult> comparison_suite(mpfr_prec_t prec = Ball::kDefaultPrec);

}  // namespace eroot
