#include "mordell/arith.hpp"

#include <algorithm>
#include <map>

namespace mordell {

Integer IntFactorization::value() const
{
    Integer v = sign;
    for (auto const& f : factors) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        v *= pk;
    }
    return v;
}

bool is_probable_prime(Integer const& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

constexpr unsigned long trial_bound = 1000000;

/* Brent's variant; n odd composite. Deterministic sequence of constants. */
Integer pollard_rho(Integer const& n)
{
    for (unsigned long cst = 1;; ++cst) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](Integer const& v) {
            Integer r = v * v + cst;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = x - y;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

void split_large(Integer const& n, std::map<Integer, unsigned long>& out)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

IntFactorization factor_integer(Integer const& n)
{
    if (n == 0)
        throw ArithmeticError("factor_integer: zero has no factorization");
    IntFactorization res;
    res.sign = sgn(n) < 0 ? -1 : 1;
    Integer m = abs(n);
    std::map<Integer, unsigned long> found;
    for (unsigned long p = 2; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (m == 1)
            break;
        Integer pp = p;
        if (pp * pp > m) {
            break;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            found[pp] += 1;
        }
    }
    split_large(m, found);
    for (auto const& [p, e] : found)
        res.factors.push_back({p, e});
    return res;
}

SixthPowerFree sixth_power_free_decompose(Rational const& c)
{
    if (c == 0)
        throw ArithmeticError("sixth_power_free_decompose: c must be nonzero");
    // c = a/b = (a b^5) / b^6
    Integer const& a = c.get_num();
    Integer const& b = c.get_den();
    Integer b5;
    mpz_pow_ui(b5.get_mpz_t(), b.get_mpz_t(), 5);
    IntFactorization f = factor_integer(a * b5);
    Integer c1 = f.sign, s = 1;
    for (auto const& pe : f.factors) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent % 6);
        c1 *= pk;
        mpz_pow_ui(pk.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent / 6);
        s *= pk;
    }
    Rational t(s, b);
    t.canonicalize();
    return {c1, t};
}

std::string to_string(Integer const& z)
{
    return z.get_str();
}

std::string to_string(Rational const& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string const& s)
{
    if (s.empty())
        throw ArithmeticError("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ArithmeticError("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw ArithmeticError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Integer gcd(Integer const& a, Integer const& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(Integer const& a, Integer const& b)
{
    Integer g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool exact_root(Integer const& n, unsigned long k, Integer& root)
{
    if (k % 2 == 0 && n < 0)
        return false;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact)
        return false;
    root = r;
    return true;
}

unsigned long euler_phi(unsigned long m)
{
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::vector<unsigned long> small_primes_up_to(unsigned long bound)
{
    std::vector<bool> sieve(bound + 1, true);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (!sieve[i])
            continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i)
            sieve[j] = false;
    }
    return primes;
}

bool is_small_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace mordell
