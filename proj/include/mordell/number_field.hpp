#ifndef MORDELL_NUMBER_FIELD_HPP
#define MORDELL_NUMBER_FIELD_HPP

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mordell/poly_q.hpp"

namespace mordell {

class NumberFieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ReduciblePolynomial : public NumberFieldError {
  public:
    explicit ReduciblePolynomial(PolyQ factor);
    PolyQ const& factor() const { return factor_; }

  private:
    PolyQ factor_;
};

class InvalidDefiningPolynomial : public NumberFieldError {
  public:
    using NumberFieldError::NumberFieldError;
};

class DivisionByZero : public NumberFieldError {
  public:
    using NumberFieldError::NumberFieldError;
};

class MismatchedFields : public NumberFieldError {
  public:
    using NumberFieldError::NumberFieldError;
};

/*
 * K = Q[t]/(f) with f monic and irreducible over Q. The rationals are the
 * degree-one field Q[t]/(t), so every caller can stay field-generic.
 * Fields are immutable and shared through FieldPtr.
 */
class NumberField {
  public:
    NumberField(PolyQ defining, std::string label);

    PolyQ const& defining_polynomial() const { return defining_; }
    int degree() const { return defining_.degree(); }
    std::string const& label() const { return label_; }
    bool is_rationals() const { return degree() == 1; }

    /* Same defining polynomial. */
    bool operator==(NumberField const& o) const { return defining_ == o.defining_; }

  private:
    PolyQ defining_;
    std::string label_;
};

using FieldPtr = std::shared_ptr<NumberField const>;

/* Normalizes f to monic and certifies irreducibility. */
FieldPtr make_number_field(PolyQ const& f, std::string label = {});
FieldPtr rationals();

class NFElement {
  public:
    NFElement() = default;
    NFElement(FieldPtr field, PolyQ residue);
    NFElement(FieldPtr field, Rational const& value);

    static NFElement generator(FieldPtr const& field);

    FieldPtr const& field() const { return field_; }
    PolyQ const& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.degree() <= 0; }
    /* Only meaningful when is_rational(). */
    Rational rational_value() const { return residue_.coeff(0); }

    NFElement inverse() const;

    NFElement& operator+=(NFElement const& o);
    NFElement& operator-=(NFElement const& o);
    NFElement& operator*=(NFElement const& o);
    NFElement& operator/=(NFElement const& o);

    friend NFElement operator+(NFElement a, NFElement const& b) { return a += b; }
    friend NFElement operator-(NFElement a, NFElement const& b) { return a -= b; }
    friend NFElement operator*(NFElement a, NFElement const& b) { return a *= b; }
    friend NFElement operator/(NFElement a, NFElement const& b) { return a /= b; }
    friend NFElement operator-(NFElement a);

    NFElement pow(unsigned long e) const;

    bool operator==(NFElement const& o) const;
    /* Residue coefficients compared from the constant term upwards; each
     * rational by absolute value, a positive value before its negative. */
    std::strong_ordering operator<=>(NFElement const& o) const;

  private:
    void check_same(NFElement const& o) const;
    FieldPtr field_;
    PolyQ residue_;
};

std::string to_string(NFElement const& a, std::string const& var = "t");

/*
 * Polynomial in x over a number field, coefficients stored as residues
 * (low degree first, no trailing zero).
 */
class PolyNF {
  public:
    PolyNF() = default;
    explicit PolyNF(FieldPtr field) : field_(std::move(field)) {}
    PolyNF(FieldPtr field, std::vector<PolyQ> residues);
    PolyNF(FieldPtr field, std::vector<NFElement> const& coeffs);
    /* Embeds a rational polynomial. */
    PolyNF(FieldPtr field, PolyQ const& rational);

    FieldPtr const& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    NFElement coeff(int i) const;
    NFElement leading() const;
    std::vector<PolyQ> const& residues() const { return coeffs_; }

    /* True when every coefficient lies in Q. */
    bool is_rational() const;
    PolyQ to_rational() const;

    NFElement operator()(NFElement const& at) const;
    PolyNF derivative() const;
    PolyNF monic() const;
    /* p(x + shift) */
    PolyNF shifted(NFElement const& shift) const;

    PolyNF& operator+=(PolyNF const& o);
    PolyNF& operator-=(PolyNF const& o);
    friend PolyNF operator+(PolyNF a, PolyNF const& b) { return a += b; }
    friend PolyNF operator-(PolyNF a, PolyNF const& b) { return a -= b; }
    friend PolyNF operator*(PolyNF const& a, PolyNF const& b);
    friend PolyNF operator*(NFElement const& s, PolyNF const& a);

    bool operator==(PolyNF const& o) const { return coeffs_ == o.coeffs_; }

  private:
    void trim();
    FieldPtr field_;
    std::vector<PolyQ> coeffs_;
};

std::pair<PolyNF, PolyNF> divmod(PolyNF const& a, PolyNF const& b);
PolyNF gcd(PolyNF const& a, PolyNF const& b);
std::string to_string(PolyNF const& p);

/* prod over the conjugates of the coefficients, computed as the resultant
 * Res_t(f(t), g(x, t)); a polynomial in x over Q of degree n * deg g. */
PolyQ norm(PolyNF const& g);

struct NFFactorization {
    NFElement leading;
    std::vector<std::pair<PolyNF, unsigned>> factors;
    PolyNF product() const;
};

/* Trager: factor the squarefree norm of g(x - s t) over Q, pull back by gcd. */
NFFactorization factor_poly_nf(PolyNF const& g);

std::vector<NFElement> roots_in_field(FieldPtr const& field, PolyQ const& g);
std::vector<NFElement> roots_in_field(PolyNF const& g);

/* A square root in K, or nullopt when beta is not a square there. */
std::optional<NFElement> sqrt_in_field(NFElement const& beta);

PolyQ cyclotomic_polynomial(unsigned long m);
bool contains_primitive_root_of_unity(FieldPtr const& field, unsigned long m);

PolyQ minimal_polynomial(NFElement const& a);
/* Characteristic polynomial of multiplication by a. */
PolyQ characteristic_polynomial(NFElement const& a);

}  // namespace mordell

#endif
