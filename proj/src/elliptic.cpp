#include "mordell/elliptic.hpp"

#include <functional>

namespace mordell {

CurveModel CurveModel::over(FieldPtr const& field, Rational a1, Rational a2, Rational a3,
                            Rational a4, Rational a6)
{
    return {NFElement(field, a1), NFElement(field, a2), NFElement(field, a3),
            NFElement(field, a4), NFElement(field, a6)};
}

bool CurvePoint::operator==(CurvePoint const& o) const
{
    if (affine_ != o.affine_)
        return false;
    return !affine_ || (x_ == o.x_ && y_ == o.y_);
}

std::strong_ordering CurvePoint::operator<=>(CurvePoint const& o) const
{
    if (affine_ != o.affine_)
        return affine_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!affine_)
        return std::strong_ordering::equal;
    if (auto c = x_ <=> o.x_; c != 0)
        return c;
    return y_ <=> o.y_;
}

std::string to_string(CurvePoint const& p)
{
    if (p.is_infinity())
        return "infinity";
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

CurvePoint ShortModelMap::to_short(CurvePoint const& p) const
{
    if (p.is_infinity())
        return p;
    NFElement u2(p.x().field(), Rational(u * u)), u3(p.x().field(), Rational(u * u * u));
    return {u2 * (p.x() + x_shift), u3 * (p.y() + half_a1 * p.x() + half_a3)};
}

CurvePoint ShortModelMap::from_short(CurvePoint const& p) const
{
    if (p.is_infinity())
        return p;
    NFElement u2(p.x().field(), Rational(u * u)), u3(p.x().field(), Rational(u * u * u));
    NFElement x = p.x() / u2 - x_shift;
    return {x, p.y() / u3 - half_a1 * x - half_a3};
}

MordellCurve::MordellCurve(FieldPtr field, NFElement c) : field_(std::move(field)), c_(std::move(c))
{
    if (c_.is_zero())
        throw SingularCurve("y^2 = x^3 is singular");
}

MordellCurve::MordellCurve(FieldPtr field, Rational const& c)
    : MordellCurve(field, NFElement(field, c))
{
}

bool MordellCurve::contains(CurvePoint const& p) const
{
    if (p.is_infinity())
        return true;
    return p.y() * p.y() == p.x() * p.x() * p.x() + c_;
}

MordellCurve MordellCurve::base_change(FieldPtr const& field) const
{
    if (*field == *field_)
        return MordellCurve(field, NFElement(field, c_.residue()));
    if (!c_.is_rational())
        throw MismatchedFields("curve coefficient does not lie in the target field");
    return MordellCurve(field, c_.rational_value());
}

MordellCurve make_curve(CurveModel const& m)
{
    FieldPtr const& K = m.field();
    auto r = [&](long v) { return NFElement(K, Rational(v)); };
    NFElement b2 = m.a1 * m.a1 + r(4) * m.a2;
    NFElement b4 = r(2) * m.a4 + m.a1 * m.a3;
    NFElement b6 = m.a3 * m.a3 + r(4) * m.a6;
    NFElement b8 = m.a1 * m.a1 * m.a6 + r(4) * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
                   m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    NFElement disc = -(b2 * b2 * b8) - r(8) * b4 * b4 * b4 - r(27) * b6 * b6 + r(9) * b2 * b4 * b6;
    if (disc.is_zero())
        throw SingularCurve("discriminant vanishes");
    NFElement c4 = b2 * b2 - r(24) * b4;
    if (!c4.is_zero())
        throw NonzeroJInvariant("j-invariant is not 0");
    NFElement c6 = -(b2 * b2 * b2) + r(36) * b2 * b4 - r(216) * b6;
    NFElement B = -c6 / r(864);

    Integer den = B.residue().denominator();
    Integer u = 1;
    if (den != 1)
        for (auto const& pe : factor_integer(den).factors) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), pe.prime.get_mpz_t(), (pe.exponent + 5) / 6);
            u *= pk;
        }
    Integer u6;
    mpz_pow_ui(u6.get_mpz_t(), u.get_mpz_t(), 6);

    MordellCurve e(K, NFElement(K, Rational(u6)) * B);
    e.provenance_ = ShortModelMap{m, u, b2 / r(12), m.a1 / r(2), m.a3 / r(2)};
    return e;
}

CurvePoint NormalizedCurve::to_original(CurvePoint const& p) const
{
    if (p.is_infinity())
        return p;
    FieldPtr const& K = curve.field();
    return {NFElement(K, t * t) * p.x(), NFElement(K, t * t * t) * p.y()};
}

CurvePoint NormalizedCurve::from_original(CurvePoint const& p) const
{
    if (p.is_infinity())
        return p;
    FieldPtr const& K = curve.field();
    return {p.x() / NFElement(K, t * t), p.y() / NFElement(K, t * t * t)};
}

NormalizedCurve normalize_mordell(MordellCurve const& e)
{
    if (!e.has_rational_c())
        throw EllipticError("normalization needs a rational coefficient");
    auto d = sixth_power_free_decompose(e.c().rational_value());
    return {MordellCurve(e.field(), Rational(d.c1)), d.t};
}

namespace {

void require_on(MordellCurve const& e, CurvePoint const& p)
{
    if (!e.contains(p))
        throw PointNotOnCurve("point " + to_string(p) + " is not on the curve");
}

CurvePoint add_unchecked(CurvePoint const& p, CurvePoint const& q)
{
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    FieldPtr const& K = p.x().field();
    NFElement lambda;
    if (p.x() == q.x()) {
        if ((p.y() + q.y()).is_zero())
            return CurvePoint::infinity();
        NFElement x2 = p.x() * p.x();
        lambda = NFElement(K, Rational(3)) * x2 / (NFElement(K, Rational(2)) * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    NFElement x3 = lambda * lambda - p.x() - q.x();
    return {x3, lambda * (p.x() - x3) - p.y()};
}

CurvePoint mul_unchecked(long k, CurvePoint const& p)
{
    CurvePoint base = p;
    if (k < 0) {
        k = -k;
        if (!base.is_infinity())
            base = CurvePoint(base.x(), -base.y());
    }
    CurvePoint acc;
    while (k) {
        if (k & 1)
            acc = add_unchecked(acc, base);
        k >>= 1;
        if (k)
            base = add_unchecked(base, base);
    }
    return acc;
}

}  // namespace

CurvePoint negate(MordellCurve const& e, CurvePoint const& p)
{
    require_on(e, p);
    if (p.is_infinity())
        return p;
    return {p.x(), -p.y()};
}

CurvePoint add_points(MordellCurve const& e, CurvePoint const& p, CurvePoint const& q)
{
    require_on(e, p);
    require_on(e, q);
    return add_unchecked(p, q);
}

CurvePoint scalar_mul(MordellCurve const& e, long k, CurvePoint const& p)
{
    require_on(e, p);
    return mul_unchecked(k, p);
}

NFElement duplication_x(MordellCurve const& e, NFElement const& x)
{
    FieldPtr const& K = e.field();
    NFElement x3 = x * x * x;
    NFElement den = NFElement(K, Rational(4)) * (x3 + e.c());
    if (den.is_zero())
        throw TwoTorsionInput("x^3 + c vanishes");
    return x * (x3 - NFElement(K, Rational(8)) * e.c()) / den;
}

std::optional<unsigned long> point_order(MordellCurve const& e, CurvePoint const& p,
                                         unsigned long bound)
{
    require_on(e, p);
    CurvePoint cur = p;
    for (unsigned long k = 1; k <= bound; ++k) {
        if (cur.is_infinity())
            return k;
        cur = add_unchecked(cur, p);
    }
    return std::nullopt;
}

/* Division polynomials */

namespace {

template <class Poly, class Scalar>
class Tower {
  public:
    Tower(Scalar c, std::function<Scalar(long)> scalar, std::function<Poly(std::vector<Scalar>)> make)
        : c_(std::move(c)), k_(std::move(scalar)), make_(std::move(make))
    {
        auto const& k = k_;
        Scalar zero = k(0), one = k(1);
        F_ = make_({c_, zero, zero, one});
        sixteen_F2_ = make_({k(16)}) * F_ * F_;
        f_[0] = make_({});
        f_[1] = make_({one});
        f_[2] = make_({one});
        f_[3] = make_({zero, k(12) * c_, zero, zero, k(3)});
        f_[4] = make_({k(-16) * c_ * c_, zero, zero, k(40) * c_, zero, zero, k(2)});
    }

    Poly const& F() const { return F_; }

    Poly const& stripped(unsigned long n)
    {
        auto it = f_.find(n);
        if (it != f_.end())
            return it->second;
        unsigned long m = n / 2;
        Poly r;
        if (n % 2 == 1) {
            Poly a = stripped(m + 2) * cube(stripped(m));
            Poly b = stripped(m - 1) * cube(stripped(m + 1));
            if (m % 2 == 0)
                r = sixteen_F2_ * a - b;
            else
                r = a - sixteen_F2_ * b;
        } else {
            Poly fm1 = stripped(m - 1), fp1 = stripped(m + 1);
            r = stripped(m) * (stripped(m + 2) * fm1 * fm1 - stripped(m - 2) * fp1 * fp1);
        }
        return f_.emplace(n, std::move(r)).first->second;
    }

    Poly squared(unsigned long n)
    {
        if (n % 2 == 1)
            return stripped(n);
        Poly const& f = stripped(n);
        return make_({k_(4)}) * F_ * f * f;
    }

    Poly const& primitive(unsigned long n,
                          std::function<Poly(Poly const&, Poly const&)> const& exact_div)
    {
        if (n < 2)
            throw EllipticError("primitive division polynomial needs n >= 2");
        auto it = prim_.find(n);
        if (it != prim_.end())
            return it->second;
        Poly q = n % 2 == 1 ? stripped(n) : stripped(n) * F_;
        q = q.monic();
        for (unsigned long d = 2; d < n; ++d)
            if (n % d == 0)
                q = exact_div(q, primitive(d, exact_div));
        return prim_.emplace(n, std::move(q)).first->second;
    }

  private:
    static Poly cube(Poly const& p) { return p * p * p; }

    Scalar c_;
    std::function<Scalar(long)> k_;
    std::function<Poly(std::vector<Scalar>)> make_;
    Poly F_, sixteen_F2_;
    std::map<unsigned long, Poly> f_, prim_;
};

}  // namespace

struct DivisionPolynomials::Impl {
    FieldPtr field;
    std::unique_ptr<Tower<PolyQ, Rational>> rational;
    std::unique_ptr<Tower<PolyNF, NFElement>> general;
};

DivisionPolynomials::DivisionPolynomials(MordellCurve const& e) : impl_(std::make_unique<Impl>())
{
    impl_->field = e.field();
    if (e.has_rational_c()) {
        impl_->rational = std::make_unique<Tower<PolyQ, Rational>>(
            e.c().rational_value(), [](long v) { return Rational(v); },
            [](std::vector<Rational> v) { return PolyQ(std::move(v)); });
    } else {
        FieldPtr K = e.field();
        impl_->general = std::make_unique<Tower<PolyNF, NFElement>>(
            e.c(), [K](long v) { return NFElement(K, Rational(v)); },
            [K](std::vector<NFElement> v) { return PolyNF(K, v); });
    }
}

DivisionPolynomials::~DivisionPolynomials() = default;

PolyQ DivisionPolynomials::get_rational(unsigned long n, DivisionConvention conv)
{
    if (!impl_->rational)
        throw EllipticError("curve coefficient is not rational");
    return conv == DivisionConvention::Stripped ? impl_->rational->stripped(n)
                                                : impl_->rational->squared(n);
}

PolyQ DivisionPolynomials::primitive_rational(unsigned long n)
{
    if (!impl_->rational)
        throw EllipticError("curve coefficient is not rational");
    return impl_->rational->primitive(n, [](PolyQ const& a, PolyQ const& b) {
        return exact_quotient(a, b);
    });
}

PolyNF DivisionPolynomials::get(unsigned long n, DivisionConvention conv)
{
    if (impl_->rational)
        return PolyNF(impl_->field, get_rational(n, conv));
    return conv == DivisionConvention::Stripped ? impl_->general->stripped(n)
                                                : impl_->general->squared(n);
}

PolyNF DivisionPolynomials::primitive(unsigned long n)
{
    if (impl_->rational)
        return PolyNF(impl_->field, primitive_rational(n));
    return impl_->general->primitive(n, [](PolyNF const& a, PolyNF const& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw ArithmeticError("inexact division of division polynomials");
        return q;
    });
}

PolyNF division_polynomial(MordellCurve const& e, unsigned long n, DivisionConvention conv)
{
    return DivisionPolynomials(e).get(n, conv);
}

PolyNF primitive_division_polynomial(MordellCurve const& e, unsigned long n)
{
    return DivisionPolynomials(e).primitive(n);
}

}  // namespace mordell
