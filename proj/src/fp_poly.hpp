#ifndef MORDELL_SRC_FP_POLY_HPP
#define MORDELL_SRC_FP_POLY_HPP

// Dense polynomials over F_l for a word-sized prime l (l < 2^31), used by
// the modular steps of the factorizer. Low degree first, no trailing zeros.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell::detail {

using FpPoly = std::vector<uint64_t>;

class Fp {
  public:
    explicit Fp(uint64_t p) : p_(p) {}
    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p_; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p_ - b) % p_; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
    uint64_t inv(uint64_t a) const;
    uint64_t reduce(Integer const& z) const;

    void trim(FpPoly& a) const;
    FpPoly add(FpPoly const& a, FpPoly const& b) const;
    FpPoly sub(FpPoly const& a, FpPoly const& b) const;
    FpPoly mul(FpPoly const& a, FpPoly const& b) const;
    std::pair<FpPoly, FpPoly> divmod(FpPoly const& a, FpPoly const& b) const;
    FpPoly mod(FpPoly const& a, FpPoly const& b) const { return divmod(a, b).second; }
    FpPoly monic(FpPoly const& a) const;
    FpPoly gcd(FpPoly a, FpPoly b) const;
    /* s a + t b = gcd (monic) */
    void xgcd(FpPoly const& a, FpPoly const& b, FpPoly& g, FpPoly& s, FpPoly& t) const;
    FpPoly derivative(FpPoly const& a) const;
    FpPoly powmod(FpPoly const& base, Integer const& e, FpPoly const& m) const;
    FpPoly from(std::vector<Integer> const& z) const;

    /* Distinct-degree factorization of a monic squarefree f. Returns
     * (d, product of all degree-d factors) for d <= max_degree, plus the
     * leftover cofactor (product of factors of degree > max_degree). */
    std::vector<std::pair<int, FpPoly>> distinct_degree(FpPoly f, int max_degree,
                                                        FpPoly& leftover) const;
    /* Cantor-Zassenhaus equal-degree splitting (odd p). */
    std::vector<FpPoly> equal_degree(FpPoly const& f, int d, std::mt19937_64& rng) const;

  private:
    uint64_t p_;
};

}  // namespace mordell::detail

#endif
