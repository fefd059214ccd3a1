#pragma once

#include <vector>

#include "eroot/ball.hpp"
#include "eroot/numeric.hpp"
#include "eroot/polynomial.hpp"
#include "eroot/series.hpp"

namespace eroot {

// Evaluation points 0, 1/n, ..., k/n for the simultaneous approximation of
// e^{1/n}, ..., e^{k/n}.  Requires k >= n >= 2.
struct AlphaVector {
    int n = 0;
    int k = 0;
    std::vector<Rational> entries;  // entries[s] = s/n

    static AlphaVector create(int n, int k);
};

// Shifted points beta_s = alpha_s - alpha_j (so beta_j = 0).
struct BetaVector {
    int j = 0;
    std::vector<Rational> entries;

    static BetaVector shifted(const AlphaVector& alpha, int j);
};

// Multiplicity vector.  The distinguished family has every entry equal to
// the base ell except entry u, which is ell - 1; varying u over 0..k yields
// the k+1 rows of the approximation matrix.
struct ExponentVector {
    std::vector<int> entries;
    long ell = 0;  // base multiplicity (family form only)
    int u = -1;    // reduced index, or -1 for a free-form vector

    static ExponentVector family(int k, long ell, int u);
    static ExponentVector uniform(int k, long ell);

    long total() const;  // L = sum of entries
};

// prod_s (entry_s - x)^{e_s}, expanded into dense coefficients.
Polynomial omega_poly(const std::vector<Rational>& entries,
                      const std::vector<int>& exponents);
Polynomial omega_poly(const AlphaVector& alpha, const ExponentVector& ell);
Polynomial omega_poly(const BetaVector& beta, const ExponentVector& ell);

// Multinomial closed form for coefficient i of omega_poly(alpha, ell):
// (-1)^i sum_{l_0 + i_1 + ... + i_k = i} prod_r C(l_r, i_r) (r/n)^{l_r - i_r}.
// Kept as an independent route; must equal the expansion coefficient.
Rational sigma_closed_form(long i, const ExponentVector& ell, const AlphaVector& alpha);

// A_0(t) = sum_{i=l_0}^{L} t^{L-i} i! sigma_i, degree L - l_0.
Polynomial a0_poly(const ExponentVector& ell, const AlphaVector& alpha);

// A_j(t) = sum_i t^{L-i} i! sigma_i(ell, beta^{(j)}), degree L - l_j.
Polynomial aj_poly(int j, const ExponentVector& ell, const AlphaVector& alpha);

// The full normalized family for fixed (n, k, ell): for every u the
// polynomials n^{k ell} / (ell-1)! * A_{u,j}(t), whose coefficients are
// integers by construction.  L = (k+1) ell - 1.
struct ApproximationSystem {
    int n = 0;
    int k = 0;
    long ell = 0;
    long L = 0;
    Rational norm_factor;                            // n^{k ell} / (ell-1)!
    std::vector<std::vector<IntPolynomial>> a_star;  // [u][j], j = 0..k

    std::vector<std::vector<Int>> values_at_one() const;
};

// Builds the family; throws std::domain_error for k < n, n < 2 or ell < 2
// and construction_error if a normalized coefficient fails to be integral.
ApproximationSystem normalize_system(int n, int k, long ell, int jobs = 1);

// Same values A*_{u,j}(1) without materializing the coefficient arrays;
// used for large ell where only the evaluations matter.
struct SystemValues {
    int n = 0;
    int k = 0;
    long ell = 0;
    std::vector<std::vector<Int>> at_one;  // [u][j]
};
SystemValues system_values_at_one(int n, int k, long ell, int jobs = 1);

// Exact truncation of e^{alpha_j t} A_0(t) - A_j(t); coefficients up to and
// including index L vanish.  Requires order >= L.
TruncatedSeries remainder_series(int j, const ExponentVector& ell,
                                 const AlphaVector& alpha, long order);
TruncatedSeries remainder_series(int j, int u, int n, int k, long ell_base, long order);

// Ball containing L*_{u,j}(1) = e^{j/n} A*_{u,0}(1) - A*_{u,j}(1).
// Escalates the working precision (x2, up to the ceiling) until the result
// radius is below |midpoint| / 4; throws insufficient_precision otherwise.
Ball remainder_value(const SystemValues& values, int j, int u, mpfr_prec_t precision_bits);
Ball remainder_value(int j, int u, int n, int k, long ell_base, mpfr_prec_t precision_bits);

inline constexpr mpfr_prec_t kPrecisionCeiling = 1 << 20;

// Exact determinant of a square integer matrix (fraction-free Bareiss
// elimination).
Int determinant(std::vector<std::vector<Int>> m);

// Determinant of the (k+1)x(k+1) matrix M[u][j] = A*_{u,j}(1).
Int system_determinant(const ApproximationSystem& system);

}  // namespace eroot
