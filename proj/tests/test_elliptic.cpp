#include <random>

#include "doctest.h"
#include "mordell/elliptic.hpp"
#include "mordell/factor.hpp"

using namespace mordell;

namespace {

PolyQ P(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return PolyQ(std::move(v));
}

NFElement Q(long v) { return NFElement(rationals(), Rational(v)); }

CurvePoint pt(FieldPtr const& K, Rational x, Rational y)
{
    return {NFElement(K, x), NFElement(K, y)};
}

/* Points found by searching small x with a square x^3 + c in K. */
std::vector<CurvePoint> sample_points(MordellCurve const& e, int want)
{
    std::vector<CurvePoint> out;
    FieldPtr const& K = e.field();
    for (long num = -40; num <= 40 && static_cast<int>(out.size()) < want; ++num) {
        for (long den : {1L, 4L}) {
            NFElement x(K, Rational(num, den));
            if (den == 4 && num % 2 == 0)
                continue;
            auto y = sqrt_in_field(x * x * x + e.c());
            if (y && !y->is_zero()) {
                out.emplace_back(x, *y);
                out.emplace_back(x, -*y);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("make_curve from a long model")
{
    auto K = rationals();
    auto e = make_curve(CurveModel::over(K, 0, 0, 1, 0, 0));
    CHECK(e.c() == Q(16));
    REQUIRE(e.provenance().has_value());
    auto const& map = *e.provenance();
    CHECK(map.u == 2);
    // (x, y) -> (4x, 8y + 4)
    auto img = map.to_short(pt(K, 0, 0));
    CHECK(img == pt(K, 0, 4));
    CHECK(e.contains(img));
    CHECK(map.from_short(img) == pt(K, 0, 0));
    CHECK(map.to_short(pt(K, 0, -1)) == pt(K, 0, -4));

    auto same = make_curve(CurveModel::over(K, 0, 0, 0, 0, 27));
    CHECK(same.c() == Q(27));
    CHECK(same.provenance()->u == 1);
    CHECK(same.provenance()->to_short(pt(K, -3, 0)) == pt(K, -3, 0));

    CHECK_THROWS_AS(make_curve(CurveModel::over(K, 0, 0, 0, 0, 0)), SingularCurve);
    CHECK_THROWS_AS(make_curve(CurveModel::over(K, 0, 0, 0, 1, 0)), NonzeroJInvariant);
    CHECK_THROWS_AS(MordellCurve(K, Rational(0)), SingularCurve);
}

TEST_CASE("make_curve transports points both ways")
{
    // y^2 + xy + y = x^3 - x^2 has j != 0; use j = 0 models with shifts.
    auto K = make_number_field(P({1, 1, 1}));
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-5, 5);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        // Shift y^2 = x^3 + k by x -> x + r, y -> y + s x + t and expand.
        Rational r = d(rng), s = d(rng), t = d(rng), k = d(rng);
        if (k == 0)
            continue;
        // y^2 + 2sxy + 2ty = x^3 + (3r - s^2) x^2 + (3r^2 - 2st) x + r^3 + k - t^2
        auto model = CurveModel::over(K, 2 * s, 3 * r - s * s, 2 * t, 3 * r * r - 2 * s * t,
                                      r * r * r + k - t * t);
        auto e = make_curve(model);
        auto const& map = *e.provenance();
        for (auto const& p : sample_points(e, 4)) {
            auto back = map.from_short(p);
            NFElement lhs = back.y() * back.y() + model.a1 * back.x() * back.y() + model.a3 * back.y();
            NFElement rhs = back.x() * back.x() * back.x() + model.a2 * back.x() * back.x() +
                            model.a4 * back.x() + model.a6;
            CHECK(lhs == rhs);
            CHECK(map.to_short(back) == p);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("normalize_mordell")
{
    auto K = rationals();
    auto a = normalize_mordell(MordellCurve(K, Rational(64)));
    CHECK(a.curve.c() == Q(1));
    CHECK(a.t == 2);
    auto b = normalize_mordell(MordellCurve(K, Rational(16)));
    CHECK(b.curve.c() == Q(16));
    CHECK(b.t == 1);
    auto c = normalize_mordell(MordellCurve(K, Rational(1, 64)));
    CHECK(c.curve.c() == Q(1));
    CHECK(c.t == Rational(1, 2));

    // (2, 3) on y^2 = x^3 + 1 maps to (8, 24) on y^2 = x^3 + 64.
    auto img = a.to_original(pt(K, 2, 3));
    CHECK(img == pt(K, 8, 24));
    CHECK(MordellCurve(K, Rational(64)).contains(img));
    CHECK(a.from_original(img) == pt(K, 2, 3));
}

TEST_CASE("group law examples")
{
    auto K = rationals();
    MordellCurve e(K, Rational(1));
    auto p = pt(K, 2, 3);
    CHECK(add_points(e, p, CurvePoint::infinity()) == p);
    CHECK(scalar_mul(e, 2, p) == pt(K, 0, 1));
    CHECK(scalar_mul(e, 3, p) == pt(K, -1, 0));
    CHECK(scalar_mul(e, 6, p).is_infinity());
    CHECK(scalar_mul(e, -1, p) == negate(e, p));
    CHECK(add_points(e, p, negate(e, p)).is_infinity());
    CHECK(duplication_x(e, NFElement(K, Rational(2))) == Q(0));
    CHECK(duplication_x(e, NFElement(K, Rational(0))) == Q(0));
    CHECK_THROWS_AS(duplication_x(e, NFElement(K, Rational(-1))), TwoTorsionInput);
    CHECK_THROWS_AS(add_points(e, pt(K, 1, 1), p), PointNotOnCurve);

    CHECK(point_order(e, CurvePoint::infinity(), 12) == 1UL);
    CHECK(point_order(e, pt(K, -1, 0), 12) == 2UL);
    CHECK(point_order(e, p, 12) == 6UL);
    CHECK(!point_order(e, p, 5).has_value());
    MordellCurve e2(K, Rational(2));
    CHECK(!point_order(e2, pt(K, -1, 1), 100).has_value());
}

TEST_CASE("group law properties")
{
    std::vector<MordellCurve> curves{MordellCurve(rationals(), Rational(-2)),
                                     MordellCurve(make_number_field(P({-2, 0, 1})), Rational(7)),
                                     MordellCurve(make_number_field(P({1, 1, 1})), Rational(-11))};
    std::mt19937_64 rng(12);
    for (auto const& e : curves) {
        auto pts = sample_points(e, 6);
        REQUIRE(pts.size() >= 2);
        pts.push_back(scalar_mul(e, 2, pts[0]));
        pts.push_back(add_points(e, pts[0], pts.back()));
        pts.push_back(CurvePoint::infinity());
        std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
        std::uniform_int_distribution<long> mult(-3, 3);
        for (int i = 0; i < 200; ++i) {
            auto a = scalar_mul(e, mult(rng), pts[pick(rng)]);
            auto b = scalar_mul(e, mult(rng), pts[pick(rng)]);
            auto c = pts[pick(rng)];
            CHECK(e.contains(a));
            CHECK(add_points(e, a, b) == add_points(e, b, a));
            CHECK(add_points(e, add_points(e, a, b), c) == add_points(e, a, add_points(e, b, c)));
            CHECK(add_points(e, a, negate(e, a)).is_infinity());
        }
    }
}

TEST_CASE("duplication_x agrees with doubling")
{
    auto K = make_number_field(P({-2, 0, 1}));
    MordellCurve e(K, Rational(7));
    auto pts = sample_points(e, 10);
    REQUIRE(!pts.empty());
    int checked = 0;
    for (long a = -30; a <= 30 && checked < 100; ++a) {
        for (size_t i = 0; i < pts.size() && checked < 100; ++i) {
            auto q = add_points(e, scalar_mul(e, a, pts[0]), pts[i]);
            if (q.is_infinity() || q.y().is_zero())
                continue;
            CHECK(duplication_x(e, q.x()) == add_points(e, q, q).x());
            ++checked;
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("duplication identity for c = a^3")
{
    // x(2P)^3 + 1 = 0 with c = 1, cleared of the denominator 64 (x^3 + 1)^3.
    PolyQ x = PolyQ::x();
    PolyQ num = x * (x * x * x - P({8}));
    PolyQ den = P({4}) * (x * x * x + P({1}));
    PolyQ cleared = num * num * num + den * den * den;
    PolyQ target = P({-8, 0, 0, 20, 0, 0, 1});
    CHECK(cleared == target * target);
}

TEST_CASE("division polynomial vectors")
{
    auto K = rationals();
    DivisionPolynomials dp(MordellCurve(K, Rational(27)));
    CHECK(dp.get_rational(3) == P({0, 324, 0, 0, 3}));
    CHECK(dp.get_rational(2, DivisionConvention::Squared) == P({108, 0, 0, 4}));
    CHECK(dp.primitive_rational(2) == P({27, 0, 0, 1}));
    CHECK(dp.primitive_rational(3) == P({0, 108, 0, 0, 1}));
    auto fac = factor_poly_q(dp.get_rational(3));
    CHECK(fac.leading == 3);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == P({0, 1}));
    CHECK(fac.factors[1].first == P({108, 0, 0, 1}));

    DivisionPolynomials d4(MordellCurve(K, Rational(4)));
    PolyQ l9 = d4.primitive_rational(9);
    CHECK(l9.degree() == 36);
    CHECK(factor_poly_q(l9).degrees() == std::vector<int>{9, 27});

    for (unsigned long n = 1; n <= 9; n += 2) {
        PolyQ f = d4.get_rational(n);
        CHECK(f.degree() == static_cast<int>((n * n - 1) / 2));
        CHECK(f.leading() == Rational(static_cast<long>(n)));
    }
}

TEST_CASE("division polynomials match the group law")
{
    // x(nP) = x - psi_{n-1} psi_{n+1} / psi_n^2 on a point of infinite order.
    for (long c : {2L, -7L}) {
        auto K = rationals();
        MordellCurve e(K, Rational(c));
        CurvePoint p = c == 2 ? pt(K, -1, 1) : pt(K, 2, 1);
        REQUIRE(e.contains(p));
        DivisionPolynomials dp(e);
        Rational x = p.x().rational_value();
        Rational F = x * x * x + c;
        auto sq = [&](unsigned long n) -> Rational {
            if (n % 2 == 0)
                return dp.get_rational(n, DivisionConvention::Squared)(x);
            Rational v = dp.get_rational(n)(x);
            return v * v;
        };
        auto prod = [&](unsigned long n) {
            // psi_{n-1} psi_{n+1}: two stripped factors, times 4F when both are even.
            Rational v = dp.get_rational(n - 1)(x) * dp.get_rational(n + 1)(x);
            return n % 2 == 1 ? v * 4 * F : v;
        };
        for (unsigned long n = 2; n <= 9; ++n) {
            auto np = scalar_mul(e, static_cast<long>(n), p);
            REQUIRE(!np.is_infinity());
            CHECK(np.x().rational_value() == x - prod(n) / sq(n));
        }
    }
}

TEST_CASE("recurrence identity over x for small n")
{
    // In stripped form, psi_{2n+1} = psi_{n+2} psi_n^3 - psi_{n-1} psi_{n+1}^3
    // picks up a factor 16F^2 on the even-index product.
    for (long c : {1L, 4L, -27L}) {
        DivisionPolynomials dp(MordellCurve(rationals(), Rational(c)));
        PolyQ F = P({c, 0, 0, 1});
        PolyQ F2x16 = P({16}) * F * F;
        for (unsigned long n = 1; n <= 4; ++n) {
            auto f = [&](unsigned long k) { return dp.get_rational(k); };
            PolyQ a = f(n + 2) * f(n) * f(n) * f(n);
            PolyQ b = f(n - 1) * f(n + 1) * f(n + 1) * f(n + 1);
            PolyQ rhs = n % 2 == 0 ? F2x16 * a - b : a - F2x16 * b;
            CHECK(f(2 * n + 1) == rhs);
        }
    }
}

TEST_CASE("division polynomials over a field with irrational c")
{
    auto K = make_number_field(P({-2, 0, 1}));
    NFElement t = NFElement::generator(K);
    MordellCurve e(K, t + NFElement(K, Rational(1)));
    DivisionPolynomials dp(e);
    CHECK(dp.get(3).degree() == 4);
    CHECK(dp.primitive(2).degree() == 3);
    CHECK(dp.primitive(4).degree() == 6);
    CHECK(dp.primitive(9).degree() == 36);
    CHECK_THROWS_AS(dp.get_rational(3), EllipticError);
    // Roots of the primitive 3-division polynomial in K lift to order-3 points.
    for (auto const& x : roots_in_field(dp.primitive(3))) {
        auto y = sqrt_in_field(x * x * x + e.c());
        if (y)
            CHECK(point_order(e, CurvePoint(x, *y), 12) == 3UL);
    }
}

TEST_CASE("primitive roots lift to exact-order points")
{
    auto K = make_number_field(P({1, 1, 1}));
    MordellCurve e(K, Rational(-27));
    DivisionPolynomials dp(e);
    int lifted = 0;
    for (unsigned long n : {2UL, 3UL, 6UL}) {
        for (auto const& x : roots_in_field(dp.primitive(n))) {
            auto y = sqrt_in_field(x * x * x + e.c());
            if (!y)
                continue;
            CHECK(point_order(e, CurvePoint(x, *y), 12) == n);
            ++lifted;
        }
    }
    CHECK(lifted >= 3);
}
