#include <set>

#include "doctest.h"
#include "mordell/classifier.hpp"

using namespace mordell;

namespace {

std::set<TorsionGroup> groups(std::initializer_list<char const*> names)
{
    std::set<TorsionGroup> out;
    for (auto n : names)
        out.insert(parse_torsion_group(n));
    return out;
}

std::set<TorsionGroup> const two_p_set = groups({"C1", "C2", "C3", "C6", "C2xC2", "C2xC6", "C3xC3"});
std::set<TorsionGroup> const three_p_set = groups({"C1", "C2", "C3", "C6", "C9"});

ExclusionTrace const& trace_for(Classification const& c, std::string const& name)
{
    auto g = parse_torsion_group(name);
    for (auto const& t : c.traces)
        if (t.candidate == g)
            return t;
    FAIL("no trace for " << name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("degree forms")
{
    CHECK(make_degree_form("2p", 7).degree() == 14);
    CHECK(make_degree_form("3p", 5).degree() == 15);
    CHECK_THROWS_AS(make_degree_form("4p", 7), InvalidDegreeForm);
    CHECK_THROWS_AS(make_degree_form("2p", 3), InvalidDegreeForm);
    CHECK_THROWS_AS(make_degree_form("3p", 9), InvalidDegreeForm);
}

TEST_CASE("cited facts load with citations")
{
    CHECK(cited_facts().size() >= 15);
    for (auto const& f : cited_facts()) {
        CHECK(!f.citation.empty());
        CHECK(!f.value_json.empty());
    }
    CHECK(cited_fact("torsion-primes-10").value_json == "[2,3,5,7,11]");
    CHECK_THROWS(cited_fact("nope"));
}

TEST_CASE("torsion prime sets")
{
    using V = std::vector<unsigned long>;
    auto a = torsion_prime_set(make_degree_form("2p", 5));
    CHECK(a.candidates == V{2, 3, 5, 7, 11});
    CHECK(a.mordell == V{2, 3});
    auto b = torsion_prime_set(make_degree_form("2p", 7));
    CHECK(b.candidates == V{2, 3, 5, 7});
    CHECK(b.mordell == V{2, 3});
    auto c = torsion_prime_set(make_degree_form("3p", 5));
    CHECK(c.candidates == V{2, 3, 5, 7, 19, 43, 67, 163});
    CHECK(c.mordell == V{2, 3});
}

TEST_CASE("image facts agree with the explicit groups")
{
    // q = 19 and 163 are 1 mod 9: only Cs+, stated and computed agree.
    for (unsigned long q : {19UL, 163UL}) {
        auto const& f = image_fact(q);
        REQUIRE(f.images.size() == 1);
        CHECK(f.images[0].image == "Cs+");
        CHECK(f.divergences.empty());
        CHECK(f.admissible() == std::set<unsigned long>{2 * (q - 1), (q - 1) * (q - 1)});
    }
    // q = 7: G3 divergence is flagged, not reconciled.
    auto const& f7 = image_fact(7);
    CHECK(f7.images.size() == 2);
    CHECK(!f7.divergences.empty());
    CHECK(f7.admissible() == std::set<unsigned long>{12, 18, 24, 36});
    // q = 11: G0 has no matrices; its non-integral value is dropped.
    auto const& f11 = image_fact(11);
    CHECK(f11.admissible() == std::set<unsigned long>{50, 120});
    CHECK(image_fact(2).admissible() == std::set<unsigned long>{1, 2, 3});
    CHECK(image_fact(2).divergences.empty());
}

TEST_CASE("prime exclusions")
{
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        auto two = make_degree_form("2p", p);
        for (unsigned long q : {5UL, 7UL}) {
            auto t = exclude_prime(q, two);
            CHECK(t.verdict == Verdict::Excluded);
            CHECK(t.rule == Rule::ImageDegree);
        }
        CHECK(exclude_prime(5, two).obstruction == "divisible-by-4");
        CHECK(exclude_prime(2, two).verdict == Verdict::Admitted);
        CHECK(exclude_prime(3, two).verdict == Verdict::Admitted);

        auto three = make_degree_form("3p", p);
        for (unsigned long q : {5UL, 7UL, 19UL, 43UL, 67UL, 163UL}) {
            auto t = exclude_prime(q, three);
            CHECK(t.verdict == Verdict::Excluded);
            CHECK(t.obstruction == "even");
        }
        CHECK(exclude_prime(2, three).verdict == Verdict::Admitted);
        CHECK(exclude_prime(3, three).verdict == Verdict::Admitted);
    }
    auto t11 = exclude_prime(11, make_degree_form("2p", 5));
    CHECK(t11.verdict == Verdict::Excluded);
    CHECK(!t11.anchor.empty());
    CHECK_THROWS_AS(exclude_prime(11, make_degree_form("2p", 7)), UnknownCandidate);
    CHECK_THROWS_AS(exclude_prime(13, make_degree_form("3p", 7)), UnknownCandidate);
}

TEST_CASE("prime-power exclusions")
{
    auto two = make_degree_form("2p", 7);
    auto three = make_degree_form("3p", 7);
    auto c9 = exclude_prime_power({1, 9}, two);
    CHECK(c9.verdict == Verdict::Excluded);
    CHECK(c9.rule == Rule::PrimePowerClimb);
    CHECK(c9.divergences.empty());
    auto c4 = exclude_prime_power({1, 4}, two);
    CHECK(c4.verdict == Verdict::Excluded);
    CHECK(c4.rule == Rule::PrimePowerClimb);
    bool shows_products = false;
    for (auto const& d : c4.details)
        shows_products |= d.find("{1, 2, 3, 4, 6, 8, 12}") != std::string::npos;
    CHECK(shows_products);

    auto c4odd = exclude_prime_power({1, 4}, three);
    CHECK(c4odd.verdict == Verdict::Excluded);
    CHECK(c4odd.rule == Rule::Divisibility);
    CHECK(exclude_prime_power({1, 9}, three).verdict == Verdict::Admitted);
    CHECK(exclude_prime_power({1, 18}, three).rule == Rule::CitedExternal);
    CHECK(exclude_prime_power({1, 27}, three).rule == Rule::CitedExternal);
    CHECK_THROWS_AS(exclude_prime_power({1, 8}, three), UnknownCandidate);
    CHECK_THROWS_AS(exclude_prime_power({2, 4}, three), UnknownCandidate);
}

TEST_CASE("full torsion")
{
    auto three = make_degree_form("3p", 11);
    auto m3 = exclude_full_torsion(3, three);
    CHECK(m3.verdict == Verdict::Excluded);
    CHECK(m3.rule == Rule::Weil);
    auto m2 = exclude_full_torsion(2, three);
    CHECK(m2.verdict == Verdict::Excluded);
    CHECK(m2.rule == Rule::Divisibility);
    CHECK(m2.divergences.empty());

    auto two = make_degree_form("2p", 11);
    CHECK(exclude_full_torsion(2, two).verdict == Verdict::Admitted);
    CHECK(exclude_full_torsion(3, two).verdict == Verdict::Admitted);
    CHECK(exclude_full_torsion(4, two).rule == Rule::ContainsExcluded);
    CHECK(exclude_full_torsion(5, two).rule == Rule::Weil);
}

TEST_CASE("classification matches the theorem sets for sample primes")
{
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
        auto a = classify(make_degree_form("2p", p));
        CHECK(a.groups == two_p_set);
        CHECK(a.groups == base_degree_set(a.form));
        auto b = classify(make_degree_form("3p", p));
        CHECK(b.groups == three_p_set);
        CHECK(b.groups == base_degree_set(b.form));
    }
}

TEST_CASE("every trace is decisive")
{
    for (auto const& shape : {"2p", "3p"}) {
        auto c = classify(make_degree_form(shape, 7));
        for (auto const& t : c.traces) {
            CHECK(!t.anchor.empty());
            if (t.verdict == Verdict::Excluded) {
                CHECK(t.rule != Rule::None);
                CHECK(!t.witness);
            } else {
                CHECK(t.verdict == Verdict::Realized);
                REQUIRE(t.witness);
                CHECK(t.witness->computed == t.candidate);
                CHECK(c.form.degree() % t.witness->field_degree == 0);
            }
        }
    }
}

TEST_CASE("named exclusions in the traces")
{
    auto a = classify(make_degree_form("2p", 5));
    for (auto const& name : {"C11", "C7", "C5", "C9", "C4", "C3xC6"})
        CHECK(trace_for(a, name).verdict == Verdict::Excluded);
    CHECK(trace_for(a, "C3xC6").rule == Rule::CitedExternal);
    CHECK(trace_for(a, "C2xC4").rule == Rule::ContainsExcluded);

    auto b = classify(make_degree_form("3p", 13));
    for (auto const& name : {"C4", "C18", "C27", "C2xC2", "C3xC3", "C19", "C163"})
        CHECK(trace_for(b, name).verdict == Verdict::Excluded);
    CHECK(trace_for(b, "C9").witness->field == "Q(x0)");
    CHECK(trace_for(b, "C3xC3").rule == Rule::Weil);
}

TEST_CASE("witnesses recompute to their groups")
{
    for (auto const& shape : {"2p", "3p"}) {
        auto form = make_degree_form(shape, 5);
        for (auto const& g : base_degree_set(form)) {
            auto w = realize(g, form);
            REQUIRE(w);
            CHECK(w->computed == g);
        }
    }
    CHECK(!realize({1, 4}, make_degree_form("2p", 5)));
}
