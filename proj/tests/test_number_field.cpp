#include <random>

#include "doctest.h"
#include "mordell/factor.hpp"
#include "mordell/number_field.hpp"
#include "oracles.hpp"

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

NFElement E(FieldPtr const& K, std::initializer_list<long> c) { return NFElement(K, P(c)); }

NFElement random_element(FieldPtr const& K, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> d(-20, 20), den(1, 7);
    std::vector<Rational> c(K->degree());
    for (auto& x : c) {
        x = Rational(d(rng), den(rng));
        x.canonicalize();
    }
    return NFElement(K, PolyQ(std::move(c)));
}

}  // namespace

TEST_CASE("field construction")
{
    CHECK(sqrt2()->degree() == 2);
    CHECK(rationals()->is_rationals());
    auto K = make_number_field(PolyQ{Rational(-4), 0, Rational(2)});
    CHECK(K->defining_polynomial() == P({-2, 0, 1}));

    try {
        make_number_field(P({-1, 0, 1}));
        FAIL("reducible polynomial accepted");
    } catch (ReduciblePolynomial const& e) {
        CHECK(e.factor().degree() == 1);
    }
    CHECK_THROWS_AS(make_number_field(P({5})), InvalidDefiningPolynomial);
    CHECK_THROWS_AS(make_number_field(PolyQ{}), InvalidDefiningPolynomial);
}

TEST_CASE("element arithmetic")
{
    auto K = sqrt2();
    auto t = NFElement::generator(K);
    CHECK(t * t == NFElement(K, Rational(2)));

    auto Z = zeta3();
    auto z = NFElement::generator(Z);
    CHECK(z.inverse() == E(Z, {-1, -1}));
    CHECK(z.pow(3) == NFElement(Z, Rational(1)));

    auto C = cubic();
    auto x0 = NFElement::generator(C);
    CHECK(x0 * (x0 * x0 - NFElement(C, Rational(3)) * x0) == NFElement(C, Rational(-1)));

    CHECK_THROWS_AS(NFElement(K, Rational(0)).inverse(), DivisionByZero);
    CHECK_THROWS_AS(t + z, MismatchedFields);
}

TEST_CASE("inverse property")
{
    std::mt19937_64 rng(5);
    for (auto const& K : {rationals(), sqrt2(), zeta3(), cubic()}) {
        NFElement one(K, Rational(1));
        int checked = 0;
        while (checked < 1000) {
            auto a = random_element(K, rng);
            if (a.is_zero())
                continue;
            CHECK(a * a.inverse() == one);
            ++checked;
        }
    }
}

TEST_CASE("element ordering")
{
    auto K = sqrt2();
    auto t = NFElement::generator(K);
    CHECK(t < -t);
    CHECK(NFElement(K, Rational(1)) < NFElement(K, Rational(-1)));
    CHECK(NFElement(K, Rational(-1)) < NFElement(K, Rational(2)));
    CHECK(NFElement(K, Rational(0)) < t);
}

TEST_CASE("norm agrees with a determinant oracle")
{
    std::mt19937_64 rng(17);
    for (auto const& K : {sqrt2(), zeta3(), cubic()}) {
        for (int i = 0; i < 20; ++i) {
            auto a = random_element(K, rng);
            PolyQ cp = characteristic_polynomial(a);
            CHECK(cp.degree() == K->degree());
            for (long x : {-3, 0, 2, 7})
                CHECK(cp(Rational(x)) == oracle::charpoly_at(K->defining_polynomial(), a.residue(), x));
        }
        // Norm of a quadratic over K evaluated pointwise by Sylvester.
        PolyNF g(K, std::vector<NFElement>{random_element(K, rng), random_element(K, rng),
                                           NFElement(K, Rational(1))});
        PolyQ N = norm(g);
        CHECK(N.degree() == 2 * K->degree());
        for (long x : {-2, 1, 5}) {
            PolyQ at;
            Rational pw = 1;
            for (auto const& c : g.residues()) {
                at += c * pw;
                pw *= x;
            }
            CHECK(N(Rational(x)) == oracle::sylvester_resultant(K->defining_polynomial(), at));
        }
    }
}

TEST_CASE("minimal polynomial")
{
    auto K = sqrt2();
    CHECK(minimal_polynomial(NFElement::generator(K)) == P({-2, 0, 1}));
    CHECK(minimal_polynomial(NFElement(K, Rational(5))) == P({-5, 1}));
    auto Z = zeta3();
    CHECK(minimal_polynomial(E(Z, {1, 1})) == P({1, -1, 1}));
}

TEST_CASE("factor over Q(zeta3)")
{
    auto Z = zeta3();
    auto z = NFElement::generator(Z);
    NFElement one(Z, Rational(1));
    auto fac = factor_poly_nf(PolyNF(Z, P({-1, 0, 0, 1})));
    REQUIRE(fac.factors.size() == 3);
    std::vector<NFElement> roots;
    for (auto const& [h, e] : fac.factors) {
        CHECK(e == 1);
        REQUIRE(h.degree() == 1);
        roots.push_back(-h.coeff(0));
    }
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<NFElement>{z, one, -one - z});
    CHECK(fac.product() == PolyNF(Z, P({-1, 0, 0, 1})));
}

TEST_CASE("irreducibility and roots over Q(sqrt2)")
{
    auto K = sqrt2();
    auto fac = factor_poly_nf(PolyNF(K, P({108, 0, 0, 1})));
    CHECK(fac.factors.size() == 1);
    CHECK(roots_in_field(K, P({108, 0, 0, 1})).empty());

    auto t = NFElement::generator(K);
    CHECK(roots_in_field(K, P({-2, 0, 1})) == std::vector<NFElement>{t, -t});
    CHECK(roots_in_field(rationals(), P({0, 108, 0, 0, 1})) ==
          std::vector<NFElement>{NFElement(rationals(), Rational(0))});
}

TEST_CASE("x^6 + 20x^3 - 8 over Q(sqrt3)")
{
    auto K = make_number_field(P({-3, 0, 1}));
    auto s = NFElement::generator(K);
    NFElement one(K, Rational(1));
    CHECK((s - one).pow(3) == E(K, {-10, 6}));
    auto roots = roots_in_field(K, P({-8, 0, 0, 20, 0, 0, 1}));
    std::vector<NFElement> want{s - one, -s - one};
    std::sort(want.begin(), want.end());
    CHECK(roots == want);
}

TEST_CASE("roots of polynomials with field coefficients")
{
    auto K = sqrt2();
    auto t = NFElement::generator(K);
    NFElement one(K, Rational(1));
    // (x - t)^2 (x - 1 - t)
    PolyNF a(K, std::vector<NFElement>{-t, one});
    PolyNF b(K, std::vector<NFElement>{-one - t, one});
    auto roots = roots_in_field(a * a * b);
    std::vector<NFElement> want{t, one + t};
    std::sort(want.begin(), want.end());
    CHECK(roots == want);
}

TEST_CASE("square roots")
{
    auto K = sqrt2();
    auto t = NFElement::generator(K);
    CHECK(sqrt_in_field(NFElement(K, Rational(2))) == t);
    CHECK(!sqrt_in_field(NFElement(K, Rational(3))).has_value());
    CHECK(sqrt_in_field(NFElement(K, Rational(0))) == NFElement(K, Rational(0)));
    // (1 + t)^2 = 3 + 2t
    auto r = sqrt_in_field(E(K, {3, 2}));
    REQUIRE(r.has_value());
    CHECK(*r * *r == E(K, {3, 2}));
    CHECK(!sqrt_in_field(t).has_value());
}

TEST_CASE("roots of unity")
{
    CHECK(cyclotomic_polynomial(1) == P({-1, 1}));
    CHECK(cyclotomic_polynomial(6) == P({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == P({1, 0, -1, 0, 1}));
    CHECK(contains_primitive_root_of_unity(zeta3(), 3));
    CHECK(contains_primitive_root_of_unity(zeta3(), 6));
    CHECK(!contains_primitive_root_of_unity(sqrt2(), 3));
    CHECK(contains_primitive_root_of_unity(sqrt2(), 2));
    CHECK(!contains_primitive_root_of_unity(sqrt2(), 4));
    CHECK(!contains_primitive_root_of_unity(cubic(), 3));
    CHECK(contains_primitive_root_of_unity(make_number_field(P({1, 0, 1})), 4));
}

TEST_CASE("factorization round trip")
{
    std::mt19937_64 rng(31);
    for (auto const& K : {sqrt2(), zeta3(), cubic()}) {
        for (int i = 0; i < 6; ++i) {
            NFElement one(K, Rational(1));
            PolyNF f(K, std::vector<NFElement>{random_element(K, rng)});
            int parts = 1 + i % 3;
            for (int j = 0; j < parts; ++j) {
                std::vector<NFElement> c;
                int d = 1 + (i + j) % 3;
                for (int k = 0; k < d; ++k)
                    c.push_back(random_element(K, rng));
                c.push_back(one);
                f = f * PolyNF(K, c);
            }
            if (f.is_zero())
                continue;
            auto fac = factor_poly_nf(f);
            CHECK(fac.product() == f);
            int total = 0;
            for (auto const& [h, e] : fac.factors) {
                CHECK(h.leading() == one);
                total += h.degree() * static_cast<int>(e);
            }
            CHECK(total == f.degree());
            CHECK(fac.factors.size() >= static_cast<size_t>(parts));
        }
    }
}
