#include <set>

#include "doctest.h"
#include "mordell/torsion.hpp"

using namespace mordell;

namespace {

PolyQ P(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return PolyQ(std::move(v));
}

FieldPtr sqrt2() { return make_number_field(P({-2, 0, 1}), "Q(sqrt2)"); }
FieldPtr zeta3() { return make_number_field(P({1, 1, 1}), "Q(zeta3)"); }
FieldPtr cubic() { return make_number_field(P({1, 0, -3, 1}), "Q(x0)"); }

TorsionGroup torsion(long c, FieldPtr const& K, bool reduction = true)
{
    TorsionOptions opt;
    opt.use_reduction_bound = reduction;
    return compute_torsion(MordellCurve(rationals(), Rational(c)), K, opt).group;
}

/* Structural checks every report must pass. */
void check_report(MordellCurve const& e, TorsionReport const& r)
{
    MordellCurve ek = e;
    CHECK(r.group.n % r.group.m == 0);
    if (r.group.n > 1) {
        REQUIRE(!r.generators.empty());
        CHECK(point_order(ek, r.generators[0], r.group.n) == r.group.n);
    }
    if (r.group.m > 1) {
        REQUIRE(r.generators.size() == 2);
        CHECK(point_order(ek, r.generators[1], r.group.m) == r.group.m);
        CHECK(contains_primitive_root_of_unity(e.field(), r.group.m));
        // Points of order dividing m: exactly m^2.
        unsigned long count = 1;
        for (unsigned long k = 2; k <= r.group.m; ++k)
            if (r.group.m % k == 0)
                count += torsion_points_of_exact_order(ek, k).size();
        CHECK(count == r.group.m * r.group.m);
    }
    for (auto const& ev : r.evidence)
        for (auto const& lvl : ev.levels)
            for (auto const& p : lvl.points) {
                CHECK(ek.contains(p));
                CHECK(point_order(ek, p, lvl.order) == lvl.order);
            }
}

}  // namespace

TEST_CASE("TorsionGroup names")
{
    CHECK(TorsionGroup{1, 1}.name() == "C1");
    CHECK(TorsionGroup{2, 6}.name() == "C2xC6");
    CHECK(parse_torsion_group("C9") == TorsionGroup{1, 9});
    CHECK(parse_torsion_group("C3xC3") == TorsionGroup{3, 3});
    CHECK_THROWS(parse_torsion_group("C3xC4"));
    CHECK_THROWS(parse_torsion_group("Z6"));
}

TEST_CASE("points of exact order")
{
    auto Q = rationals();
    auto pts = torsion_points_of_exact_order(MordellCurve(Q, Rational(1)), 2);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == CurvePoint(NFElement(Q, Rational(-1)), NFElement(Q, Rational(0))));

    auto Z = zeta3();
    auto t = NFElement::generator(Z);
    auto two = torsion_points_of_exact_order(MordellCurve(Z, Rational(-27)), 2);
    REQUIRE(two.size() == 3);
    std::vector<NFElement> xs;
    for (auto const& p : two) {
        CHECK(p.y().is_zero());
        xs.push_back(p.x());
    }
    NFElement three(Z, Rational(3));
    std::vector<NFElement> want{three, three * t, -three - three * t};
    std::sort(want.begin(), want.end());
    CHECK(xs == want);

    CHECK(torsion_points_of_exact_order(MordellCurve(Q, Rational(4)), 9).empty());
    CHECK(torsion_points_of_exact_order(MordellCurve(Q, Rational(4)), 3).size() == 2);
}

TEST_CASE("candidate prime sets")
{
    auto field_of_degree = [](int d) {
        std::vector<Rational> c(d + 1);
        c[0] = -2;
        c[d] = 1;
        return make_number_field(PolyQ(c));
    };
    using V = std::vector<unsigned long>;
    CHECK(candidate_prime_set(field_of_degree(14)) == V{2, 3, 5, 7});
    CHECK(candidate_prime_set(field_of_degree(10)) == V{2, 3, 5, 7, 11});
    CHECK(candidate_prime_set(field_of_degree(15)) == V{2, 3, 5, 7, 19, 43, 67, 163});
    CHECK(candidate_prime_set(rationals()) == V{2, 3, 5, 7});
    CHECK(candidate_prime_set(rationals(), V{7, 2, 7}) == V{2, 7});
    CHECK_THROWS(candidate_prime_set(rationals(), V{4}));
}

TEST_CASE("reduction counts")
{
    auto r = reduction_counts(MordellCurve(rationals(), Rational(1)), 3);
    REQUIRE(r.size() == 3);
    // p = 5, 11 are 2 mod 3: p + 1 points; p = 7 gives 12 for y^2 = x^3 + 1.
    CHECK(r[0].p == 5);
    CHECK(r[0].points == 6);
    CHECK(r[1].p == 7);
    CHECK(r[1].points == 12);
    CHECK(r[2].points == 12);
    // Over Q(sqrt2) primes of degree 2 appear above inert p.
    auto s = reduction_counts(MordellCurve(sqrt2(), Rational(1)), 4);
    bool inert = std::any_of(s.begin(), s.end(), [](auto const& x) { return x.residue_degree == 2; });
    CHECK(inert);
    for (auto const& x : s)
        CHECK(x.points % 6 == 0);
}

TEST_CASE("torsion over explicit fields")
{
    CHECK(torsion(27, sqrt2()) == TorsionGroup{1, 2});
    CHECK(torsion(16, sqrt2()) == TorsionGroup{1, 3});
    CHECK(torsion(1, sqrt2()) == TorsionGroup{1, 6});
    CHECK(torsion(-27, zeta3()) == TorsionGroup{2, 6});
    CHECK(torsion(-1, zeta3()) == TorsionGroup{2, 2});
    CHECK(torsion(4, rationals()) == TorsionGroup{1, 3});
    CHECK(torsion(16, cubic()) == TorsionGroup{1, 9});
    CHECK(torsion(1, cubic()) == TorsionGroup{1, 6});

    auto Z = zeta3();
    auto e = make_curve(CurveModel::over(Z, 0, 0, 1, 0, 0));
    auto report = compute_torsion(e, Z);
    CHECK(report.group == TorsionGroup{3, 3});
    check_report(e, report);
}

TEST_CASE("reports are internally consistent")
{
    struct Case {
        long c;
        FieldPtr K;
    };
    for (auto const& [c, K] : std::vector<Case>{{-27, zeta3()}, {1, sqrt2()}, {16, cubic()}, {-1, zeta3()}}) {
        MordellCurve e(K, Rational(c));
        check_report(e, compute_torsion(e, K));
    }
}

TEST_CASE("reduction bound does not change results")
{
    CHECK(torsion(-27, zeta3(), false) == TorsionGroup{2, 6});
    CHECK(torsion(16, cubic(), false) == TorsionGroup{1, 9});
    CHECK(torsion(1, sqrt2(), false) == TorsionGroup{1, 6});
    for (long c : {1L, -2L, 4L, 5L, -27L, 16L, -432L})
        CHECK(torsion(c, rationals(), false) == torsion(c, rationals(), true));
}

TEST_CASE("torsion over Q agrees with the Lutz-Nagell oracle")
{
    std::set<TorsionGroup> allowed{{1, 1}, {1, 2}, {1, 3}, {1, 6}};
    int compared = 0;
    for (long c = -50; c <= 50; ++c) {
        if (c == 0)
            continue;
        MordellCurve e(rationals(), Rational(c));
        auto got = compute_torsion(e, rationals()).group;
        CHECK_MESSAGE(got == rational_torsion_oracle(e), "c = " << c);
        CHECK(allowed.count(got));
        ++compared;
    }
    CHECK(compared == 100);
    CHECK(rational_torsion_oracle(MordellCurve(rationals(), Rational(1))) == TorsionGroup{1, 6});
    CHECK(rational_torsion_oracle(MordellCurve(rationals(), Rational(-27))) == TorsionGroup{1, 2});
    CHECK(rational_torsion_oracle(MordellCurve(rationals(), Rational(5))) == TorsionGroup{1, 1});
    CHECK_THROWS(rational_torsion_oracle(MordellCurve(rationals(), Rational(1, 2))));
}

TEST_CASE("parallel workers give identical reports")
{
    TorsionOptions one, many;
    many.workers = 4;
    MordellCurve e(rationals(), Rational(-27));
    auto a = compute_torsion(e, zeta3(), one);
    auto b = compute_torsion(e, zeta3(), many);
    CHECK(a.group == b.group);
    CHECK(a.generators == b.generators);
}
