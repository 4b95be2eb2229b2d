#ifndef MORDELL_ARITH_HPP
#define MORDELL_ARITH_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mordell {

using Integer = mpz_class;
using Rational = mpq_class;

/* Raised for violated preconditions of the arithmetic layer (zero inputs,
 * malformed strings). Callers above translate these to their own errors. */
class ArithmeticError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;
    bool operator==(PrimePower const&) const = default;
};

struct IntFactorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing

    Integer value() const;
};

/* Trial division up to 10^6, then Pollard rho on what is left. */
IntFactorization factor_integer(Integer const& n);

bool is_probable_prime(Integer const& n);

/* c = c1 * t^6 with c1 a sixth-power-free integer and t > 0 rational. */
struct SixthPowerFree {
    Integer c1;
    Rational t;
};
SixthPowerFree sixth_power_free_decompose(Rational const& c);

/* "p/q" in lowest terms, or "p" when the denominator is 1. */
std::string to_string(Rational const& r);
std::string to_string(Integer const& z);
Rational parse_rational(std::string const& s);

Integer lcm(Integer const& a, Integer const& b);
Integer gcd(Integer const& a, Integer const& b);

/* Exact integer k-th root if one exists. */
bool exact_root(Integer const& n, unsigned long k, Integer& root);

/* Euler's totient for small arguments. */
unsigned long euler_phi(unsigned long m);

std::vector<unsigned long> small_primes_up_to(unsigned long bound);
bool is_small_prime(unsigned long n);

}  // namespace mordell

#endif
