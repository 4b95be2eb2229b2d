#ifndef MORDELL_ELLIPTIC_HPP
#define MORDELL_ELLIPTIC_HPP

#include <map>
#include <memory>
#include <optional>

#include "mordell/number_field.hpp"

namespace mordell {

class EllipticError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class SingularCurve : public EllipticError {
  public:
    using EllipticError::EllipticError;
};

class NonzeroJInvariant : public EllipticError {
  public:
    using EllipticError::EllipticError;
};

class PointNotOnCurve : public EllipticError {
  public:
    using EllipticError::EllipticError;
};

class TwoTorsionInput : public EllipticError {
  public:
    using EllipticError::EllipticError;
};

/* y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 */
struct CurveModel {
    NFElement a1, a2, a3, a4, a6;

    static CurveModel over(FieldPtr const& field, Rational a1, Rational a2, Rational a3,
                           Rational a4, Rational a6);
    FieldPtr const& field() const { return a6.field(); }
};

class CurvePoint {
  public:
    CurvePoint() = default;  // the point at infinity
    CurvePoint(NFElement x, NFElement y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !affine_; }
    NFElement const& x() const { return x_; }
    NFElement const& y() const { return y_; }

    bool operator==(CurvePoint const& o) const;
    /* Infinity first, then by x, then by y. */
    std::strong_ordering operator<=>(CurvePoint const& o) const;

  private:
    bool affine_ = false;
    NFElement x_, y_;
};

std::string to_string(CurvePoint const& p);

/*
 * Change of variables from a long model to y^2 = x^3 + c:
 *   X = u^2 (x + x_shift),  Y = u^3 (y + half_a1 x + half_a3).
 */
struct ShortModelMap {
    CurveModel source;
    Integer u;
    NFElement x_shift, half_a1, half_a3;

    CurvePoint to_short(CurvePoint const& p) const;
    CurvePoint from_short(CurvePoint const& p) const;
};

class MordellCurve {
  public:
    /* y^2 = x^3 + c; throws SingularCurve when c = 0. */
    MordellCurve(FieldPtr field, NFElement c);
    MordellCurve(FieldPtr field, Rational const& c);

    FieldPtr const& field() const { return field_; }
    NFElement const& c() const { return c_; }
    bool has_rational_c() const { return c_.is_rational(); }
    std::optional<ShortModelMap> const& provenance() const { return provenance_; }

    bool contains(CurvePoint const& p) const;
    /* The same curve over a field containing c (c must be rational when the
     * fields differ). */
    MordellCurve base_change(FieldPtr const& field) const;

  private:
    friend MordellCurve make_curve(CurveModel const& model);
    FieldPtr field_;
    NFElement c_;
    std::optional<ShortModelMap> provenance_;
};

/* Short model with u the least positive integer making c integral in the
 * power basis. Throws SingularCurve, then NonzeroJInvariant. */
MordellCurve make_curve(CurveModel const& model);

struct NormalizedCurve {
    MordellCurve curve;  // y^2 = x^3 + c1 with c1 a sixth-power-free integer
    Rational t;          // c = c1 t^6

    /* (x, y) on the normalized curve to (t^2 x, t^3 y) on the original. */
    CurvePoint to_original(CurvePoint const& p) const;
    CurvePoint from_original(CurvePoint const& p) const;
};

NormalizedCurve normalize_mordell(MordellCurve const& e);

CurvePoint negate(MordellCurve const& e, CurvePoint const& p);
CurvePoint add_points(MordellCurve const& e, CurvePoint const& p, CurvePoint const& q);
CurvePoint scalar_mul(MordellCurve const& e, long k, CurvePoint const& p);

/* x(2P) = x(x^3 - 8c) / (4(x^3 + c)); throws TwoTorsionInput when x^3 + c = 0. */
NFElement duplication_x(MordellCurve const& e, NFElement const& x);

/* Least k <= bound with kP = O, or nullopt. */
std::optional<unsigned long> point_order(MordellCurve const& e, CurvePoint const& p,
                                         unsigned long bound);

/*
 * Stripped: psi_n for odd n and psi_n / (2y) for even n.
 * Squared: psi_n for odd n and psi_n^2 = 4(x^3 + c) (psi_n / 2y)^2 for even n.
 */
enum class DivisionConvention { Stripped, Squared };

/*
 * Memoized division polynomials of one curve. When c is rational the tower
 * is computed over Q and embedded on request.
 */
class DivisionPolynomials {
  public:
    explicit DivisionPolynomials(MordellCurve const& e);
    ~DivisionPolynomials();
    DivisionPolynomials(DivisionPolynomials const&) = delete;
    DivisionPolynomials& operator=(DivisionPolynomials const&) = delete;

    PolyNF get(unsigned long n, DivisionConvention conv = DivisionConvention::Stripped);
    /* Monic; its roots are the x-coordinates of the points of exact order n. */
    PolyNF primitive(unsigned long n);
    /* Rational versions; only valid when c is rational. */
    PolyQ get_rational(unsigned long n, DivisionConvention conv = DivisionConvention::Stripped);
    PolyQ primitive_rational(unsigned long n);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

PolyNF division_polynomial(MordellCurve const& e, unsigned long n,
                           DivisionConvention conv = DivisionConvention::Stripped);
PolyNF primitive_division_polynomial(MordellCurve const& e, unsigned long n);

}  // namespace mordell

#endif
