#include "eroot/numeric.hpp"

#include <deque>
#include <mutex>

namespace eroot {

Rational make_rational(const Int& num, const Int& den)
{
    if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Int(num), Int(den));
}

namespace {

// Growing factorial table.  A deque keeps references to earlier entries
// valid while the table extends.
std::deque<Int> g_factorials;
std::mutex g_factorial_mutex;

}  // namespace

const Int& factorial(unsigned long i)
{
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    if (g_factorials.empty()) g_factorials.emplace_back(1);
    while (g_factorials.size() <= i) {
        Int next = g_factorials.back() * static_cast<unsigned long>(g_factorials.size());
        g_factorials.push_back(std::move(next));
    }
    return g_factorials[i];
}

Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_int(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& q, unsigned long exp)
{
    return make_rational(pow_int(q.get_num(), exp), pow_int(q.get_den(), exp));
}

std::string to_string(const Int& z)
{
    return z.get_str();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace eroot
