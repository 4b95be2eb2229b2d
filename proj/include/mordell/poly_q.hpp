#ifndef MORDELL_POLY_Q_HPP
#define MORDELL_POLY_Q_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

/* Univariate polynomial over Q. Coefficients are stored low degree first
 * and the top coefficient is never zero; the zero polynomial is empty. */
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    PolyQ(std::initializer_list<Rational> coeffs);
    explicit PolyQ(Rational const& constant);

    static PolyQ x() { return monomial(1, 1); }
    static PolyQ monomial(Rational const& coeff, int degree);

    /* -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    Rational coeff(int i) const;
    Rational const& leading() const;
    std::span<Rational const> coeffs() const { return coeffs_; }

    Rational operator()(Rational const& at) const;
    PolyQ derivative() const;
    PolyQ monic() const;
    /* p(x + shift) */
    PolyQ shifted(Rational const& shift) const;
    /* p(s * x) */
    PolyQ scaled(Rational const& s) const;
    /* true when every coefficient is an integer */
    bool is_integral() const;
    /* lcm of the coefficient denominators */
    Integer denominator() const;

    PolyQ& operator+=(PolyQ const& o);
    PolyQ& operator-=(PolyQ const& o);
    PolyQ& operator*=(PolyQ const& o);
    PolyQ& operator*=(Rational const& s);

    friend PolyQ operator+(PolyQ a, PolyQ const& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, PolyQ const& b) { return a -= b; }
    friend PolyQ operator*(PolyQ const& a, PolyQ const& b);
    friend PolyQ operator*(PolyQ a, Rational const& s) { return a *= s; }
    friend PolyQ operator*(Rational const& s, PolyQ a) { return a *= s; }
    friend PolyQ operator-(PolyQ a);
    friend PolyQ operator/(PolyQ const& a, PolyQ const& b);
    friend PolyQ operator%(PolyQ const& a, PolyQ const& b);

    bool operator==(PolyQ const& o) const { return coeffs_ == o.coeffs_; }

    /* Canonical order: degree first, then coefficients from the constant
     * term upwards, each rational ordered by value. */
    std::strong_ordering operator<=>(PolyQ const& o) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::pair<PolyQ, PolyQ> divmod(PolyQ const& a, PolyQ const& b);

/* Monic gcd; gcd(f, 0) is f made monic. Both zero is rejected. */
PolyQ gcd(PolyQ const& f, PolyQ const& g);

/* Returns (g, s, t) with s f + t g = g monic. */
struct ExtendedGcd {
    PolyQ gcd, s, t;
};
ExtendedGcd xgcd(PolyQ const& f, PolyQ const& g);

Rational resultant(PolyQ const& f, PolyQ const& g);

/* Composition f(g(x)). */
PolyQ compose(PolyQ const& f, PolyQ const& g);

/* Monic product of the distinct irreducible factors of f. */
PolyQ squarefree_part(PolyQ const& f);

/* Yun's algorithm: monic squarefree a_i with f = lc * prod a_i^i. */
std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(PolyQ const& f);

/* Exact division; throws when b does not divide a. */
PolyQ exact_quotient(PolyQ const& a, PolyQ const& b);

/* Human-readable form, e.g. "x^3 - 3*x^2 + 1". */
std::string to_string(PolyQ const& p, std::string const& var = "x");

/* Coefficient strings low degree first, as used by the JSON interfaces. */
std::vector<std::string> to_coefficient_strings(PolyQ const& p);
PolyQ from_coefficient_strings(std::vector<std::string> const& coeffs);

}  // namespace mordell

#endif
