#include "eroot/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <atomic>
#include <future>
#include <limits>

#include "eroot/bounds.hpp"
#include "eroot/pade.hpp"
#include "eroot/series.hpp"

namespace eroot {

namespace {

struct ScanBest {
    double best1 = std::numeric_limits<double>::infinity();
    double best2 = std::numeric_limits<double>::infinity();

    void offer(double v)
    {
        if (v < best1) {
            best2 = best1;
            best1 = v;
        } else if (v < best2) {
            best2 = v;
        }
    }
    void merge(const ScanBest& o)
    {
        offer(o.best1);
        offer(o.best2);
    }
};

using Tuple = std::vector<long long>;  // lambda_1 .. lambda_k

// Depth-first walk of the half grid (leading nonzero entry positive),
// carrying the partial sum.  leaf(t, s) sees every admissible tuple once.
template <typename Leaf>
void walk(int level, int k, long long H, bool nonzero_seen, double partial,
          Tuple& tuple, const std::vector<double>& x, Leaf&& leaf)
{
    if (level > k) {
        if (nonzero_seen) leaf(tuple, partial);
        return;
    }
    const long long lo = nonzero_seen ? -H : 0;
    for (long long v = lo; v <= H; ++v) {
        tuple[static_cast<size_t>(level - 1)] = v;
        walk(level + 1, k, H, nonzero_seen || v != 0,
             partial + static_cast<double>(v) * x[static_cast<size_t>(level)], tuple, x,
             std::forward<Leaf>(leaf));
    }
}

// Same walk with the top-level coordinate pinned (for parallel chunks).
template <typename Leaf>
void walk_fixed_top(long long v1, int k, long long H, const std::vector<double>& x, Leaf&& leaf)
{
    Tuple tuple(static_cast<size_t>(k));
    tuple[0] = v1;
    walk(2, k, H, v1 != 0, static_cast<double>(v1) * x[1], tuple, x,
         std::forward<Leaf>(leaf));
}

double dist_to_int(double s)
{
    return std::fabs(s - std::nearbyint(s));
}

// Correctly rounded doubles for e^{i/n} plus a proven bound on the
// evaluation error of the double-precision form:
//   |computed - exact| <= (k + 3) 2^-52 (k H e^{k/n} + 1).
std::vector<double> exp_points_double(int n, int k)
{
    std::vector<double> x(static_cast<size_t>(k) + 1, 0.0);
    for (int i = 1; i <= k; ++i) {
        Ball b = real_exp_fraction(i, n, 64);
        x[static_cast<size_t>(i)] = b.mid_double();
    }
    return x;
}

double double_error_bound(int n, int k, long long H)
{
    double xmax = std::exp(static_cast<double>(k) / n);
    return (k + 3) * std::ldexp(1.0, -52) *
           (static_cast<double>(k) * static_cast<double>(H) * xmax + 1.0);
}

struct BallCandidate {
    Tuple inner;
    long long lambda0 = 0;
    Ball value;
};

mpfr_prec_t default_precision(int k, long long H)
{
    double bits = 64.0 + std::ceil(4.0 * k * std::log(static_cast<double>(std::max<long long>(H, 2))));
    return static_cast<mpfr_prec_t>(bits);
}

Int nearest_int(const mpfr_t x)
{
    mpfr_t r;
    mpfr_init2(r, mpfr_get_prec(x));
    mpfr_rint(r, x, MPFR_RNDN);
    Int z;
    mpfr_get_z(z.get_mpz_t(), r, MPFR_RNDN);
    mpfr_clear(r);
    return z;
}

}  // namespace

CertificateRecord min_linear_form(int n, int k, long long H, mpfr_prec_t precision_bits,
                                  int jobs, bool lambda0_bounded)
{
    if (n < 2 || k < n) throw std::domain_error("min_linear_form: need k >= n >= 2");
    if (H < 1) throw std::domain_error("min_linear_form: need H >= 1");
    const auto t_start = std::chrono::steady_clock::now();

    const std::vector<double> x = exp_points_double(n, k);
    const double err = double_error_bound(n, k, H);
    const double margin = std::max(1e-9, 8.0 * err);

    // pass 1: two smallest |form| values over the half grid
    std::vector<long long> tops;
    for (long long v = 0; v <= H; ++v) tops.push_back(v);
    std::vector<ScanBest> results(tops.size());
    auto run_chunk = [&](size_t idx) {
        ScanBest sb;
        walk_fixed_top(tops[idx], k, H, x,
                       [&sb](const Tuple&, double s) { sb.offer(dist_to_int(s)); });
        results[idx] = sb;
    };
    if (jobs > 1) {
        std::vector<std::future<void>> futs;
        std::atomic<size_t> next{0};
        int workers = std::min<int>(jobs, static_cast<int>(tops.size()));
        for (int w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&] {
                for (size_t idx = next.fetch_add(1); idx < tops.size(); idx = next.fetch_add(1))
                    run_chunk(idx);
            }));
        }
        for (auto& f : futs) f.get();
    } else {
        for (size_t idx = 0; idx < tops.size(); ++idx) run_chunk(idx);
    }
    ScanBest best;
    for (const auto& r : results) best.merge(r);

    // pass 2: collect every tuple that could be the minimum or the
    // runner-up once the double error is accounted for
    const double cutoff = best.best2 + margin;
    std::vector<Tuple> candidates;
    for (long long v = 0; v <= H; ++v) {
        walk_fixed_top(v, k, H, x, [&](const Tuple& t, double s) {
            if (dist_to_int(s) <= cutoff) candidates.push_back(t);
        });
    }
    std::sort(candidates.begin(), candidates.end());

    // ball stage with escalation
    mpfr_prec_t prec = precision_bits > 0 ? precision_bits : default_precision(k, H);
    prec = std::max<mpfr_prec_t>(prec, 64);

    CertificateRecord rec;
    rec.n = n;
    rec.k = k;
    rec.H = H;
    rec.lambda0_bounded = lambda0_bounded;
    unsigned long long full = 1;
    for (int i = 0; i < k; ++i) full *= static_cast<unsigned long long>(2 * H + 1);
    rec.tuples_scanned = (full - 1) / 2;  // minus the zero tuple, halved by sign symmetry

    while (true) {
        std::vector<Ball> xb;
        xb.push_back(Ball(prec));
        for (int i = 1; i <= k; ++i) xb.push_back(real_exp_fraction(i, n, prec));

        std::vector<BallCandidate> combos;
        for (const auto& t : candidates) {
            Ball s(prec);
            for (int i = 1; i <= k; ++i)
                s = s + xb[static_cast<size_t>(i)].mul_int(Int(static_cast<long>(t[static_cast<size_t>(i - 1)])));
            Int base = -nearest_int(s.mid());
            for (long off = -1; off <= 1; ++off) {
                Int lam0 = base + off;
                if (lambda0_bounded) {
                    if (lam0 > static_cast<long>(H)) lam0 = static_cast<long>(H);
                    if (lam0 < -static_cast<long>(H)) lam0 = -static_cast<long>(H);
                }
                BallCandidate bc;
                bc.inner = t;
                bc.lambda0 = mpz_get_si(lam0.get_mpz_t());
                bc.value = s.add_int(lam0).abs();
                combos.push_back(std::move(bc));
            }
        }
        // dedupe identical (tuple, lambda0) combos created by clamping
        std::sort(combos.begin(), combos.end(), [](const BallCandidate& a, const BallCandidate& b) {
            if (a.inner != b.inner) return a.inner < b.inner;
            return a.lambda0 < b.lambda0;
        });
        combos.erase(std::unique(combos.begin(), combos.end(),
                                 [](const BallCandidate& a, const BallCandidate& b) {
                                     return a.inner == b.inner && a.lambda0 == b.lambda0;
                                 }),
                     combos.end());

        std::stable_sort(combos.begin(), combos.end(),
                         [](const BallCandidate& a, const BallCandidate& b) {
                             return mpfr_cmp(a.value.mid(), b.value.mid()) < 0;
                         });

        bool separated = combos.size() >= 2 &&
                         Ball::certainly_less(combos[0].value, combos[1].value) &&
                         combos[0].value.is_positive();
        if (combos.size() == 1) separated = combos[0].value.is_positive();
        if (separated) {
            rec.min_value = combos[0].value;
            rec.argmin.clear();
            rec.argmin.push_back(combos[0].lambda0);
            for (long long v : combos[0].inner) rec.argmin.push_back(v);
            rec.precision_bits = prec;
            break;
        }
        if (prec >= kPrecisionCeiling)
            throw insufficient_precision("min_linear_form: precision ceiling reached");
        prec = std::min<mpfr_prec_t>(prec * 2, kPrecisionCeiling);
    }

    if (H >= 3) {
        rec.empirical_omega =
            -std::log(rec.min_value.mid_double()) / std::log(static_cast<double>(H));
    } else {
        rec.empirical_omega = std::numeric_limits<double>::quiet_NaN();
    }
    rec.theorem_omega = std::numeric_limits<double>::quiet_NaN();
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t_start)
                           .count();
    return rec;
}

CertificateRecord certify_against_theorem(int n, int k, long long H,
                                          mpfr_prec_t precision_bits, int jobs,
                                          bool lambda0_bounded)
{
    if (H < 3) throw std::domain_error("certify_against_theorem: need H >= 3");
    CertificateRecord rec = min_linear_form(n, k, H, precision_bits, jobs, lambda0_bounded);
    const double logH = std::log(static_cast<double>(H));
    rec.theorem_omega = omega_theorem_d(k, logH);
    rec.hypothesis_satisfied = theorem_hypothesis(n, k, logH);

    // H^{-omega} as a ball, compared rigorously against the minimum
    mpfr_prec_t prec = std::max<mpfr_prec_t>(rec.precision_bits, 128);
    Ball bound = Ball::exp(Ball::from_double(-rec.theorem_omega, prec) *
                           Ball::log(Ball::from_si(H, prec)));
    rec.verdict = Ball::certainly_less(bound, rec.min_value);
    return rec;
}

std::vector<CertificateRecord> empirical_omega_curve(int n, int k,
                                                     const std::vector<long long>& Hs,
                                                     mpfr_prec_t precision_bits, int jobs,
                                                     bool lambda0_bounded)
{
    std::vector<CertificateRecord> out;
    out.reserve(Hs.size());
    for (long long H : Hs) {
        if (H < 3) throw std::domain_error("empirical_omega_curve: need H >= 3");
        out.push_back(certify_against_theorem(n, k, H, precision_bits, jobs, lambda0_bounded));
    }
    return out;
}

}  // namespace eroot
