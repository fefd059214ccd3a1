#include "eroot/pade.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace eroot {

AlphaVector AlphaVector::create(int n, int k)
{
    if (n < 2 || k < n) throw std::domain_error("AlphaVector: need k >= n >= 2");
    AlphaVector a;
    a.n = n;
    a.k = k;
    a.entries.reserve(static_cast<size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) a.entries.push_back(make_rational(s, n));
    return a;
}

BetaVector BetaVector::shifted(const AlphaVector& alpha, int j)
{
    if (j < 0 || j > alpha.k) throw std::domain_error("BetaVector: shift index out of range");
    BetaVector b;
    b.j = j;
    b.entries.reserve(alpha.entries.size());
    for (const auto& a : alpha.entries) b.entries.push_back(a - alpha.entries[static_cast<size_t>(j)]);
    return b;
}

ExponentVector ExponentVector::family(int k, long ell, int u)
{
    if (k < 2) throw std::domain_error("ExponentVector: need k >= 2");
    if (ell < 2) throw std::domain_error("ExponentVector: need ell >= 2");
    if (u < 0 || u > k) throw std::domain_error("ExponentVector: u out of range");
    ExponentVector e;
    e.ell = ell;
    e.u = u;
    e.entries.assign(static_cast<size_t>(k) + 1, static_cast<int>(ell));
    e.entries[static_cast<size_t>(u)] = static_cast<int>(ell) - 1;
    return e;
}

ExponentVector ExponentVector::uniform(int k, long ell)
{
    if (k < 1 || ell < 1) throw std::domain_error("ExponentVector: need k >= 1, ell >= 1");
    ExponentVector e;
    e.ell = ell;
    e.u = -1;
    e.entries.assign(static_cast<size_t>(k) + 1, static_cast<int>(ell));
    return e;
}

long ExponentVector::total() const
{
    return std::accumulate(entries.begin(), entries.end(), 0L);
}

Polynomial omega_poly(const std::vector<Rational>& entries,
                      const std::vector<int>& exponents)
{
    if (entries.size() != exponents.size())
        throw std::domain_error("omega_poly: entry/exponent size mismatch");
    Polynomial acc = Polynomial::constant(Rational(1));
    for (size_t s = 0; s < entries.size(); ++s) {
        if (exponents[s] < 1) throw std::domain_error("omega_poly: exponents must be positive");
        Polynomial lin({entries[s], Rational(-1)});
        for (int rep = 0; rep < exponents[s]; ++rep) acc = acc * lin;
    }
    return acc;
}

namespace {

// Integer-scaled expansion: P(x) = prod_s (c_s - n x)^{e_s}, so that
// prod_s (c_s/n - x)^{e_s} = P(x) / n^L.  Zero entries contribute a pure
// monomial (-n x)^{e_s} and are split off as a shift.
std::vector<Int> scaled_omega(const std::vector<long>& c, const std::vector<int>& exps, long n)
{
    long shift = 0;
    std::vector<Int> acc{Int(1)};
    for (size_t s = 0; s < c.size(); ++s) {
        if (c[s] == 0) {
            shift += exps[s];
            continue;
        }
        // binomial expansion of (c - n x)^e
        const int e = exps[s];
        std::vector<Int> f(static_cast<size_t>(e) + 1);
        Int pc = pow_int(Int(c[s]), static_cast<unsigned long>(e));  // c^e, then /c each step
        Int pn(1);                                                   // (-n)^i
        for (int i = 0; i <= e; ++i) {
            f[static_cast<size_t>(i)] = binomial(static_cast<unsigned long>(e),
                                                 static_cast<unsigned long>(i)) *
                                        pc * pn;
            if (i < e) {
                mpz_divexact(pc.get_mpz_t(), pc.get_mpz_t(), Int(c[s]).get_mpz_t());
                pn *= -n;
            }
        }
        if (acc.size() == 1 && acc[0] == 1) {
            acc = std::move(f);
            continue;
        }
        std::vector<Int> out(acc.size() + f.size() - 1, Int(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            if (sgn(acc[i]) == 0) continue;
            for (size_t jj = 0; jj < f.size(); ++jj) {
                mpz_addmul(out[i + jj].get_mpz_t(), acc[i].get_mpz_t(), f[jj].get_mpz_t());
            }
        }
        acc = std::move(out);
    }
    if (shift > 0) {
        Int mono = pow_int(Int(-n), static_cast<unsigned long>(shift));
        std::vector<Int> out(acc.size() + static_cast<size_t>(shift), Int(0));
        for (size_t i = 0; i < acc.size(); ++i) out[i + static_cast<size_t>(shift)] = acc[i] * mono;
        acc = std::move(out);
    }
    return acc;
}

std::vector<long> shifted_numerators(int k, int j)
{
    std::vector<long> c(static_cast<size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) c[static_cast<size_t>(s)] = s - j;
    return c;
}

Polynomial omega_from_scaled(const std::vector<long>& c, const std::vector<int>& exps, long n)
{
    std::vector<Int> p = scaled_omega(c, exps, n);
    Int den = pow_int(Int(n), static_cast<unsigned long>(p.size()) - 1);  // n^L
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& pi : p) out.push_back(make_rational(pi, den));
    return Polynomial(std::move(out));
}

// Coefficients of A(t) from the scaled expansion: coefficient of t^{L-i}
// is i! * P_i / n^L.
Polynomial a_poly_from_scaled(const std::vector<Int>& p, long n)
{
    const size_t L = p.size() - 1;
    Int den = pow_int(Int(n), static_cast<unsigned long>(L));
    std::vector<Rational> out(L + 1, Rational(0));
    for (size_t i = 0; i <= L; ++i) {
        if (sgn(p[i]) == 0) continue;
        out[L - i] = make_rational(factorial(static_cast<unsigned long>(i)) * p[i], den);
    }
    return Polynomial(std::move(out));
}

void check_family_args(int n, int k, long ell)
{
    if (n < 2 || k < n) throw std::domain_error("need k >= n >= 2");
    if (ell < 2) throw std::domain_error("need ell >= 2");
}

}  // namespace

Polynomial omega_poly(const AlphaVector& alpha, const ExponentVector& ell)
{
    return omega_from_scaled(shifted_numerators(alpha.k, 0), ell.entries, alpha.n);
}

Polynomial omega_poly(const BetaVector& beta, const ExponentVector& ell)
{
    // Entries are (s - j)/n; recover n from the spacing of consecutive points.
    if (beta.entries.size() != ell.entries.size())
        throw std::domain_error("omega_poly: size mismatch");
    Rational step = beta.entries[1] - beta.entries[0];
    long n = mpz_get_si(step.get_den().get_mpz_t());
    return omega_from_scaled(shifted_numerators(static_cast<int>(beta.entries.size()) - 1, beta.j),
                             ell.entries, n);
}

Rational sigma_closed_form(long i, const ExponentVector& ell, const AlphaVector& alpha)
{
    const long L = ell.total();
    const long l0 = ell.entries[0];
    if (i < 0 || i > L) return Rational(0);
    if (i < l0) return Rational(0);

    const int k = alpha.k;
    Rational total(0);
    // enumerate i_1..i_k with sum = i - l0, 0 <= i_r <= l_r
    std::vector<long> idx(static_cast<size_t>(k) + 1, 0);
    long target = i - l0;

    // recursive lambda with pruning on the remaining achievable sum
    std::vector<long> suffix_max(static_cast<size_t>(k) + 2, 0);
    for (int r = k; r >= 1; --r)
        suffix_max[static_cast<size_t>(r)] =
            suffix_max[static_cast<size_t>(r) + 1] + ell.entries[static_cast<size_t>(r)];

    auto rec = [&](auto&& self, int r, long remaining, const Rational& partial) -> void {
        if (r > k) {
            if (remaining == 0) total += partial;
            return;
        }
        if (remaining > suffix_max[static_cast<size_t>(r)]) return;
        const long lr = ell.entries[static_cast<size_t>(r)];
        for (long ir = 0; ir <= std::min<long>(lr, remaining); ++ir) {
            Rational term = partial *
                Rational(binomial(static_cast<unsigned long>(lr), static_cast<unsigned long>(ir))) *
                pow_rational(alpha.entries[static_cast<size_t>(r)],
                             static_cast<unsigned long>(lr - ir));
            self(self, r + 1, remaining - ir, term);
        }
    };
    rec(rec, 1, target, Rational(1));

    if (i % 2 != 0) total = -total;
    return total;
}

Polynomial a0_poly(const ExponentVector& ell, const AlphaVector& alpha)
{
    std::vector<Int> p = scaled_omega(shifted_numerators(alpha.k, 0), ell.entries, alpha.n);
    return a_poly_from_scaled(p, alpha.n);
}

Polynomial aj_poly(int j, const ExponentVector& ell, const AlphaVector& alpha)
{
    if (j < 1 || j > alpha.k) throw std::domain_error("aj_poly: need 1 <= j <= k");
    std::vector<Int> p = scaled_omega(shifted_numerators(alpha.k, j), ell.entries, alpha.n);
    return a_poly_from_scaled(p, alpha.n);
}

namespace {

// Normalized coefficients: i! * P_i / (n^{ell-1} (ell-1)!), integer by
// construction.  Index of the output is the power of t (= L - i).
IntPolynomial normalized_from_scaled(const std::vector<Int>& p, int n, long ell)
{
    const size_t L = p.size() - 1;
    Int den = pow_int(Int(n), static_cast<unsigned long>(ell - 1)) *
              factorial(static_cast<unsigned long>(ell - 1));
    IntPolynomial out;
    out.coeffs.assign(L + 1, Int(0));
    for (size_t i = 0; i <= L; ++i) {
        if (sgn(p[i]) == 0) continue;
        Int num = factorial(static_cast<unsigned long>(i)) * p[i];
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw construction_error("normalize_system: non-integral coefficient");
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.coeffs[L - i] = std::move(q);
    }
    while (!out.coeffs.empty() && sgn(out.coeffs.back()) == 0) out.coeffs.pop_back();
    return out;
}

// Sum_i i! P_i / (n^{ell-1} (ell-1)!) without keeping the coefficients.
Int value_at_one_from_scaled(const std::vector<Int>& p, int n, long ell)
{
    Int sum(0);
    Int fac(1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (i > 0) fac *= static_cast<unsigned long>(i);
        if (sgn(p[i]) != 0) mpz_addmul(sum.get_mpz_t(), fac.get_mpz_t(), p[i].get_mpz_t());
    }
    Int den = pow_int(Int(n), static_cast<unsigned long>(ell - 1)) *
              factorial(static_cast<unsigned long>(ell - 1));
    if (!mpz_divisible_p(sum.get_mpz_t(), den.get_mpz_t()))
        throw construction_error("system values: non-integral A*(1)");
    Int q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), den.get_mpz_t());
    return q;
}

template <typename PerU>
void for_each_u(int k, int jobs, PerU&& body)
{
    if (jobs <= 1) {
        for (int u = 0; u <= k; ++u) body(u);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<size_t>(k) + 1);
    for (int u = 0; u <= k; ++u)
        futs.push_back(std::async(std::launch::async, [&body, u] { body(u); }));
    for (auto& f : futs) f.get();
}

}  // namespace

std::vector<std::vector<Int>> ApproximationSystem::values_at_one() const
{
    std::vector<std::vector<Int>> m(a_star.size());
    for (size_t u = 0; u < a_star.size(); ++u) {
        m[u].reserve(a_star[u].size());
        for (const auto& p : a_star[u]) m[u].push_back(p.evaluate_one());
    }
    return m;
}

ApproximationSystem normalize_system(int n, int k, long ell, int jobs)
{
    check_family_args(n, k, ell);
    ApproximationSystem sys;
    sys.n = n;
    sys.k = k;
    sys.ell = ell;
    sys.L = (static_cast<long>(k) + 1) * ell - 1;
    sys.norm_factor = make_rational(pow_int(Int(n), static_cast<unsigned long>(k) * ell),
                                    factorial(static_cast<unsigned long>(ell - 1)));
    sys.a_star.assign(static_cast<size_t>(k) + 1, {});

    for_each_u(k, jobs, [&](int u) {
        ExponentVector ev = ExponentVector::family(k, ell, u);
        std::vector<IntPolynomial> row;
        row.reserve(static_cast<size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            std::vector<Int> p = scaled_omega(shifted_numerators(k, j), ev.entries, n);
            row.push_back(normalized_from_scaled(p, n, ell));
        }
        sys.a_star[static_cast<size_t>(u)] = std::move(row);
    });
    return sys;
}

SystemValues system_values_at_one(int n, int k, long ell, int jobs)
{
    check_family_args(n, k, ell);
    SystemValues v;
    v.n = n;
    v.k = k;
    v.ell = ell;
    v.at_one.assign(static_cast<size_t>(k) + 1, {});

    for_each_u(k, jobs, [&](int u) {
        ExponentVector ev = ExponentVector::family(k, ell, u);
        std::vector<Int> row;
        row.reserve(static_cast<size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            std::vector<Int> p = scaled_omega(shifted_numerators(k, j), ev.entries, n);
            row.push_back(value_at_one_from_scaled(p, n, ell));
        }
        v.at_one[static_cast<size_t>(u)] = std::move(row);
    });
    return v;
}

TruncatedSeries remainder_series(int j, const ExponentVector& ell,
                                 const AlphaVector& alpha, long order)
{
    if (j < 1 || j > alpha.k) throw std::domain_error("remainder_series: need 1 <= j <= k");
    const long L = ell.total();
    if (order < L) throw std::domain_error("remainder_series: order must be >= L");

    Polynomial A0 = a0_poly(ell, alpha);
    Polynomial Aj = aj_poly(j, ell, alpha);
    TruncatedSeries E = series_of_exp(alpha.entries[static_cast<size_t>(j)], order);
    TruncatedSeries S0 = TruncatedSeries::of_polynomial(A0, order);
    TruncatedSeries Sj = TruncatedSeries::of_polynomial(Aj, order);
    return E * S0 - Sj;
}

TruncatedSeries remainder_series(int j, int u, int n, int k, long ell_base, long order)
{
    AlphaVector alpha = AlphaVector::create(n, k);
    ExponentVector ev = ExponentVector::family(k, ell_base, u);
    return remainder_series(j, ev, alpha, order);
}

Ball remainder_value(const SystemValues& values, int j, int u, mpfr_prec_t precision_bits)
{
    if (j < 1 || j > values.k) throw std::domain_error("remainder_value: need 1 <= j <= k");
    if (u < 0 || u > values.k) throw std::domain_error("remainder_value: u out of range");
    const Int& a0 = values.at_one[static_cast<size_t>(u)][0];
    const Int& aj = values.at_one[static_cast<size_t>(u)][static_cast<size_t>(j)];

    mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, 64);
    while (true) {
        Ball x = real_exp_fraction(j, values.n, prec);
        Ball v = x.mul_int(a0).add_int(-aj);
        // accept once the radius is below |midpoint| / 4
        Ball four_rad(Ball::kRadiusPrec);
        mpfr_mul_ui(four_rad.mid_mut(), v.rad(), 4, MPFR_RNDU);
        mpfr_t absmid;
        mpfr_init2(absmid, Ball::kRadiusPrec);
        mpfr_abs(absmid, v.mid(), MPFR_RNDD);
        bool ok = mpfr_cmp(four_rad.mid(), absmid) < 0;
        mpfr_clear(absmid);
        if (ok) return v;
        if (prec >= kPrecisionCeiling)
            throw insufficient_precision("remainder_value: precision ceiling reached");
        prec = std::min<mpfr_prec_t>(prec * 2, kPrecisionCeiling);
    }
}

Ball remainder_value(int j, int u, int n, int k, long ell_base, mpfr_prec_t precision_bits)
{
    SystemValues v = system_values_at_one(n, k, ell_base);
    return remainder_value(v, j, u, precision_bits);
}

Int determinant(std::vector<std::vector<Int>> m)
{
    const size_t dim = m.size();
    for (const auto& row : m)
        if (row.size() != dim) throw std::domain_error("determinant: matrix not square");
    if (dim == 0) return Int(1);

    int sign = 1;
    Int prev(1);
    for (size_t step = 0; step + 1 < dim; ++step) {
        if (sgn(m[step][step]) == 0) {
            size_t swap_row = step + 1;
            while (swap_row < dim && sgn(m[swap_row][step]) == 0) ++swap_row;
            if (swap_row == dim) return Int(0);
            std::swap(m[step], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = step + 1; i < dim; ++i) {
            for (size_t jj = step + 1; jj < dim; ++jj) {
                Int t = m[i][jj] * m[step][step] - m[i][step] * m[step][jj];
                mpz_divexact(m[i][jj].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][step] = 0;
        }
        prev = m[step][step];
    }
    Int out = m[dim - 1][dim - 1];
    if (sign < 0) out = -out;
    return out;
}

Int system_determinant(const ApproximationSystem& system)
{
    return determinant(system.values_at_one());
}

}  // namespace eroot
