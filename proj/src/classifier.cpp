#include "mordell/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "mordell/galois.hpp"
#include "cited_facts_data.hpp"

namespace mordell {

using json = nlohmann::json;

namespace {

json const& facts_document()
{
    static json const doc = json::parse(cited_facts_json);
    return doc;
}

json const& fact_value(std::string const& id)
{
    for (auto const& f : facts_document().at("facts"))
        if (f.at("id") == id)
            return f.at("value");
    throw std::logic_error("missing cited fact " + id);
}

std::vector<unsigned long> fact_numbers(std::string const& id)
{
    return fact_value(id).get<std::vector<unsigned long>>();
}

std::set<TorsionGroup> fact_groups(std::string const& id)
{
    std::set<TorsionGroup> out;
    for (auto const& name : fact_value(id))
        out.insert(parse_torsion_group(name.get<std::string>()));
    return out;
}

template <class Range>
std::string fmt_set(Range const& r)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto const& x : r) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string fmt_rationals(std::vector<Rational> const& r)
{
    std::vector<std::string> s;
    for (auto const& x : r)
        s.push_back(to_string(x));
    return fmt_set(s);
}

std::set<unsigned long> divisors(unsigned long d)
{
    std::set<unsigned long> out;
    for (unsigned long k = 1; k <= d; ++k)
        if (d % k == 0)
            out.insert(k);
    return out;
}

std::set<unsigned long> intersect(std::set<unsigned long> const& a, std::set<unsigned long> const& b)
{
    std::set<unsigned long> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::set<unsigned long> products(std::set<unsigned long> const& a, std::set<unsigned long> const& b)
{
    std::set<unsigned long> out;
    for (auto x : a)
        for (auto y : b)
            out.insert(x * y);
    return out;
}

std::set<unsigned long> orbit_degrees(std::string const& name, unsigned long q)
{
    return orbit_degree_set(build_named_subgroup(name, static_cast<uint32_t>(q))).degrees;
}

std::vector<unsigned long> prime_factors(unsigned long n)
{
    std::vector<unsigned long> out;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::string label_of(std::string const& shape, std::string const& step)
{
    return shape + "/" + step;
}

ExclusionTrace excluded(TorsionGroup g, Rule rule, std::string anchor)
{
    ExclusionTrace t;
    t.candidate = g;
    t.verdict = Verdict::Excluded;
    t.rule = rule;
    t.anchor = std::move(anchor);
    return t;
}

ExclusionTrace admitted(TorsionGroup g, std::string anchor)
{
    ExclusionTrace t;
    t.candidate = g;
    t.anchor = std::move(anchor);
    return t;
}

/* Largest degree whose classification is encoded for this shape. */
unsigned long base_degree(DegreeForm const& form)
{
    return form.shape == Shape::TwoP ? 2 : 3;
}

/* Groups known over some field of degree e, for e | base degree. */
std::set<TorsionGroup> groups_up_to(unsigned long e, DegreeForm const& form)
{
    auto out = fact_groups("mordell-torsion-over-q");
    if (e > 1) {
        auto more = base_degree_set(form);
        out.insert(more.begin(), more.end());
    }
    return out;
}

/*
 * Degree chain for a point of order q^2 over a point of order q: the possible
 * [Q(P):Q] are step x base, cut down to divisors of d. When every survivor is
 * at most the base degree, the group would already occur there.
 */
ExclusionTrace climb_chain(TorsionGroup g, DegreeForm const& form, std::set<unsigned long> const& step,
                           std::set<unsigned long> const& base, std::string const& step_id,
                           std::string const& base_note)
{
    auto divs = divisors(form.degree());
    auto step_d = intersect(step, divs);
    auto base_d = intersect(base, divs);
    auto all = products(step, base);
    auto within = intersect(products(step_d, base_d), divs);
    unsigned long top = within.empty() ? 0 : *within.rbegin();

    ExclusionTrace t = admitted(g, label_of(form.shape_name(), "climb/" + g.name()));
    t.details.push_back("step degrees " + fmt_set(step) + ", dividing d: " + fmt_set(step_d));
    t.details.push_back(base_note + ": " + fmt_set(base_d));
    t.details.push_back("possible [Q(P):Q] " + fmt_set(all) + ", dividing d = " +
                        std::to_string(form.degree()) + ": " + fmt_set(within));
    t.citations.push_back(step_id);
    if (within.empty() || top <= base_degree(form)) {
        auto known = groups_up_to(top, form);
        if (!known.count(g)) {
            t.verdict = Verdict::Excluded;
            t.rule = Rule::PrimePowerClimb;
            t.details.push_back("so " + g.name() + " would occur over a field of degree <= " +
                                std::to_string(std::max<unsigned long>(top, 1)) +
                                ", where it does not");
            t.citations.push_back(form.shape == Shape::TwoP ? "mordell-torsion-quadratic"
                                                            : "mordell-torsion-cubic");
        } else {
            t.details.push_back(g.name() + " occurs over degree " + std::to_string(top));
        }
    } else {
        t.details.push_back("a degree above the base degree survives; no exclusion");
    }
    return t;
}

std::set<unsigned long> orbit_degree_union(ImageFact const& f)
{
    std::set<unsigned long> out;
    for (auto const& img : f.images)
        if (img.computed)
            out.insert(img.computed->begin(), img.computed->end());
    return out;
}

ExclusionTrace cited_multiple_of_nine(TorsionGroup g, DegreeForm const& form, std::string const& id)
{
    unsigned long need = fact_value(id).get<unsigned long>();
    ExclusionTrace t = admitted(g, label_of(form.shape_name(), g.name()));
    t.citations.push_back(id);
    bool applies = id != "order-27-odd-degree" || form.degree() % 2 == 1;
    if (applies && form.degree() % need != 0) {
        t.verdict = Verdict::Excluded;
        t.rule = Rule::CitedExternal;
        t.details.push_back(g.name() + " needs " + std::to_string(need) + " | d, and d = " +
                            std::to_string(form.degree()));
    } else {
        t.details.push_back("the cited criterion does not exclude " + g.name());
    }
    return t;
}

/* C4 over an odd-degree field: a point of order 4 makes c = a^3 and x(2P) a
 * root of X^3 + a^3, so x^6 + 20 a^3 x^3 - 8 a^6 = 0 and sqrt(3) is in K. */
ExclusionTrace c4_odd_degree(DegreeForm const& form)
{
    TorsionGroup g{1, 4};
    ExclusionTrace t = admitted(g, label_of(form.shape_name(), "C4"));
    // x(2P)^3 + 1 for c = 1, cleared of denominators.
    auto Q = rationals();
    PolyQ x = PolyQ::x();
    PolyQ num = x * (x * x * x - PolyQ(Rational(8)));
    PolyQ den = Rational(4) * (x * x * x + PolyQ(Rational(1)));
    PolyQ cleared = num * num * num + den * den * den;
    PolyQ target{-8, 0, 0, 20, 0, 0, 1};
    bool identity = cleared == target * target;
    t.details.push_back(std::string("x(2P)^3 + 1 clears to (x^6 + 20x^3 - 8)^2: ") +
                        (identity ? "yes" : "no"));
    // u = x^3 satisfies u^2 + 20u - 8 = 0.
    PolyQ quad{-8, 20, 1};
    bool rational_root = !roots_in_field(Q, quad).empty();
    auto K3 = make_number_field(PolyQ{-3, 0, 1}, "Q(sqrt3)");
    auto roots = roots_in_field(K3, quad);
    auto s = NFElement::generator(K3);
    NFElement ten(K3, Rational(10)), six(K3, Rational(6));
    bool expected = roots.size() == 2 &&
                    std::find(roots.begin(), roots.end(), -ten + six * s) != roots.end() &&
                    std::find(roots.begin(), roots.end(), -ten - six * s) != roots.end();
    t.details.push_back("x^3 = -10 +- 6 sqrt(3), found over Q(sqrt3): " + std::string(expected ? "yes" : "no") +
                        ", over Q: " + (rational_root ? "yes" : "no"));
    if (identity && expected && !rational_root && form.degree() % 2 == 1) {
        t.verdict = Verdict::Excluded;
        t.rule = Rule::Divisibility;
        t.details.push_back("Q(sqrt3) has degree 2, which does not divide d = " +
                            std::to_string(form.degree()));
    }
    return t;
}

ExclusionTrace subgroup_trace(TorsionGroup g, ExclusionTrace const& sub)
{
    ExclusionTrace t = excluded(g, Rule::ContainsExcluded, sub.anchor);
    t.details.push_back("contains " + sub.candidate.name() + ", excluded by " + to_string(sub.rule));
    return t;
}

/* Witness table: curve a-invariants and base field. */
struct WitnessSpec {
    Shape shape;
    TorsionGroup group;
    std::vector<long> a;
    std::vector<long> poly;
    std::string field;
};

std::vector<WitnessSpec> const& witness_specs()
{
    static std::vector<long> const Q{0, 1}, S2{-2, 0, 1}, Z3{1, 1, 1}, X0{1, 0, -3, 1};
    auto c = [](long v) { return std::vector<long>{0, 0, 0, 0, v}; };
    static std::vector<WitnessSpec> const specs{
        {Shape::TwoP, {1, 1}, c(-108), Q, "Q"},
        {Shape::TwoP, {1, 2}, c(27), S2, "Q(sqrt2)"},
        {Shape::TwoP, {1, 3}, c(16), S2, "Q(sqrt2)"},
        {Shape::TwoP, {1, 6}, c(1), S2, "Q(sqrt2)"},
        {Shape::TwoP, {2, 2}, c(-1), Z3, "Q(zeta3)"},
        {Shape::TwoP, {2, 6}, c(-27), Z3, "Q(zeta3)"},
        {Shape::TwoP, {3, 3}, {0, 0, 1, 0, 0}, Z3, "Q(zeta3)"},
        {Shape::ThreeP, {1, 1}, c(-108), Q, "Q"},
        {Shape::ThreeP, {1, 2}, c(27), X0, "Q(x0)"},
        {Shape::ThreeP, {1, 3}, c(4), Q, "Q"},
        {Shape::ThreeP, {1, 6}, c(1), X0, "Q(x0)"},
        {Shape::ThreeP, {1, 9}, c(16), X0, "Q(x0)"},
    };
    return specs;
}

std::string curve_text(std::vector<long> const& a)
{
    std::ostringstream os;
    os << "y^2";
    if (a[0])
        os << " + " << a[0] << "xy";
    if (a[2])
        os << (a[2] == 1 ? " + y" : " + " + std::to_string(a[2]) + "y");
    os << " = x^3";
    if (a[1])
        os << " + " << a[1] << "x^2";
    if (a[3])
        os << " + " << a[3] << "x";
    if (a[4])
        os << (a[4] < 0 ? " - " : " + ") << std::labs(a[4]);
    return os.str();
}

}  // namespace

DegreeForm make_degree_form(std::string const& shape, unsigned long p)
{
    if (shape != "2p" && shape != "3p")
        throw InvalidDegreeForm("shape must be 2p or 3p, got " + shape);
    if (p < 5 || !is_small_prime(p))
        throw InvalidDegreeForm("p must be a prime >= 5, got " + std::to_string(p));
    return {shape == "2p" ? Shape::TwoP : Shape::ThreeP, p};
}

std::vector<CitedFact> const& cited_facts()
{
    static std::vector<CitedFact> const facts = [] {
        std::vector<CitedFact> out;
        for (auto const& f : facts_document().at("facts"))
            out.push_back({f.at("id"), f.at("citation"), f.at("value").dump()});
        return out;
    }();
    return facts;
}

CitedFact const& cited_fact(std::string const& id)
{
    for (auto const& f : cited_facts())
        if (f.id == id)
            return f;
    throw std::invalid_argument("no cited fact " + id);
}

std::set<unsigned long> ImageDegrees::admissible() const
{
    std::set<unsigned long> out;
    for (auto const& s : stated)
        if (s.get_den() == 1 && s > 0)
            out.insert(s.get_num().get_ui());
    if (computed)
        out.insert(computed->begin(), computed->end());
    return out;
}

std::set<unsigned long> ImageFact::admissible() const
{
    std::set<unsigned long> out;
    for (auto const& img : images) {
        auto a = img.admissible();
        out.insert(a.begin(), a.end());
    }
    return out;
}

ImageFact const& image_fact(unsigned long q)
{
    static std::mutex mu;
    static std::map<unsigned long, ImageFact> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(q); it != cache.end())
        return it->second;
    if (!is_small_prime(q))
        throw std::invalid_argument("image facts need a prime");

    ImageFact f;
    f.q = q;
    std::vector<std::string> names;
    if (q == 2 || q == 3) {
        f.citation_id = q == 2 ? "mod2-images" : "mod3-images";
        names = fact_value(f.citation_id).get<std::vector<std::string>>();
    } else {
        f.citation_id = "images-by-residue-mod-9";
        names = fact_value(f.citation_id).at(std::to_string(q % 9)).get<std::vector<std::string>>();
    }
    for (auto const& name : names) {
        ImageDegrees img;
        img.image = name;
        if (q > 3) {
            for (auto const& form : fact_value("point-degrees-by-image").at(name)) {
                auto c = form.at("coeffs").get<std::vector<long>>();
                Rational Q = q;
                img.stated.push_back((Rational(c[0]) + c[1] * Q + c[2] * Q * Q) /
                                     Rational(form.at("den").get<long>()));
            }
        }
        if (name != "G0")
            img.computed = orbit_degrees(name, q);
        if (q > 3 && img.computed) {
            for (auto const& s : img.stated)
                if (s.get_den() != 1)
                    f.divergences.push_back(name + "(" + std::to_string(q) + "): stated degree " + to_string(s) +
                                            " is not an integer");
                else if (!img.computed->count(s.get_num().get_ui()))
                    f.divergences.push_back(name + "(" + std::to_string(q) + "): stated degree " + to_string(s) +
                                            " is not an orbit size");
            for (auto d : *img.computed)
                if (std::find(img.stated.begin(), img.stated.end(), Rational(d)) == img.stated.end())
                    f.divergences.push_back(name + "(" + std::to_string(q) + "): orbit size " + std::to_string(d) +
                                            " is not stated");
        }
        f.images.push_back(std::move(img));
    }
    if (q == 2) {
        auto cited = fact_numbers("point-degrees-q2");
        auto got = orbit_degree_union(f);
        if (std::set<unsigned long>(cited.begin(), cited.end()) != got)
            f.divergences.push_back("order-2 point degrees: cited " + fmt_set(cited) + ", computed " + fmt_set(got));
    }
    return cache.emplace(q, std::move(f)).first->second;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Excluded: return "EXCLUDED";
    case Verdict::Admitted: return "ADMITTED";
    case Verdict::Realized: return "REALIZED";
    }
    return "?";
}

std::string to_string(Rule r)
{
    switch (r) {
    case Rule::None: return "none";
    case Rule::Divisibility: return "divisibility";
    case Rule::Weil: return "weil";
    case Rule::ImageDegree: return "image-degree";
    case Rule::PrimePowerClimb: return "prime-power-climb";
    case Rule::CitedExternal: return "cited-external";
    case Rule::ContainsExcluded: return "contains-excluded";
    }
    return "?";
}

PrimeSets torsion_prime_set(DegreeForm const& form)
{
    PrimeSets out;
    if (form.shape == Shape::TwoP)
        out.candidates = fact_numbers(form.p == 5 ? "torsion-primes-10" : "torsion-primes-2p");
    else
        out.candidates = fact_numbers("torsion-primes-3p");
    for (auto q : out.candidates)
        if (exclude_prime(q, form).verdict != Verdict::Excluded)
            out.mordell.push_back(q);
    return out;
}

ExclusionTrace exclude_prime(unsigned long q, DegreeForm const& form)
{
    std::vector<unsigned long> cands = form.shape == Shape::TwoP
                                           ? fact_numbers(form.p == 5 ? "torsion-primes-10" : "torsion-primes-2p")
                                           : fact_numbers("torsion-primes-3p");
    if (std::find(cands.begin(), cands.end(), q) == cands.end())
        throw UnknownCandidate("prime " + std::to_string(q) + " is not a candidate for " + form.shape_name());

    TorsionGroup g{1, q};
    auto const& fact = image_fact(q);
    unsigned long d = form.degree();
    ExclusionTrace t = admitted(g, label_of(form.shape_name(), "prime/" + g.name()));
    t.citations.push_back(form.shape == Shape::TwoP ? (form.p == 5 ? "torsion-primes-10" : "torsion-primes-2p")
                                                    : "torsion-primes-3p");
    t.citations.push_back(fact.citation_id);
    if (q > 3)
        t.citations.push_back("point-degrees-by-image");
    for (auto const& img : fact.images) {
        std::string line = "image " + img.image + ": stated " + fmt_rationals(img.stated);
        if (img.computed)
            line += ", orbit sizes " + fmt_set(*img.computed);
        else
            line += ", not constructed";
        t.details.push_back(line);
    }
    auto degrees = fact.admissible();
    auto dividing = intersect(degrees, divisors(d));
    t.details.push_back("admissible degrees " + fmt_set(degrees) + ", dividing d = " + std::to_string(d) + ": " +
                        fmt_set(dividing));
    t.divergences = fact.divergences;
    if (dividing.empty()) {
        t.verdict = Verdict::Excluded;
        t.rule = Rule::ImageDegree;
        bool all_even = std::all_of(degrees.begin(), degrees.end(), [](auto x) { return x % 2 == 0; });
        bool all_four = std::all_of(degrees.begin(), degrees.end(), [](auto x) { return x % 4 == 0; });
        if (d % 2 == 1 && all_even)
            t.obstruction = "even";
        else if (d % 4 != 0 && all_four)
            t.obstruction = "divisible-by-4";
        else
            t.obstruction = "no-degree-divides-d";
    }
    return t;
}

ExclusionTrace exclude_prime_power(TorsionGroup const& group, DegreeForm const& form)
{
    if (group.m != 1 || (group.n != 4 && group.n != 9 && group.n != 18 && group.n != 27))
        throw UnknownCandidate("no prime-power rule for " + group.name());
    bool two_p = form.shape == Shape::TwoP;
    unsigned long d = form.degree();

    if (group.n == 4) {
        if (!two_p)
            return c4_odd_degree(form);
        auto step = fact_numbers("division-step-4-over-2");
        auto t = climb_chain(group, form, {step.begin(), step.end()}, orbit_degree_union(image_fact(2)),
                             "division-step-4-over-2", "order-2 point degrees from the mod-2 images");
        t.divergences = image_fact(2).divergences;
        return t;
    }
    if (group.n == 9) {
        std::set<unsigned long> step;
        for (auto k : fact_numbers("division-step-9-over-3")) {
            auto dk = divisors(k);
            step.insert(dk.begin(), dk.end());
        }
        std::set<unsigned long> base;
        for (auto const& img : image_fact(3).images)
            base.insert(img.computed->begin(), img.computed->end());
        auto t = climb_chain(group, form, step, base, "division-step-9-over-3",
                             "order-3 point degrees from the mod-3 images");
        if (two_p) {
            auto cited = fact_numbers("point-degrees-q3-dividing-2p");
            auto got = intersect(base, divisors(d));
            t.citations.push_back("point-degrees-q3-dividing-2p");
            if (std::set<unsigned long>(cited.begin(), cited.end()) != got)
                t.divergences.push_back("order-3 point degrees dividing d: cited " + fmt_set(cited) + ", computed " +
                                        fmt_set(got));
        }
        return t;
    }
    // C18 and C27 contain C9, which the 2p climb already excludes.
    if (two_p)
        return subgroup_trace(group, exclude_prime_power({1, 9}, form));
    return cited_multiple_of_nine(group, form, group.n == 18 ? "order-18-degree" : "order-27-odd-degree");
}

ExclusionTrace exclude_full_torsion(unsigned long m, DegreeForm const& form)
{
    if (m < 2)
        throw std::invalid_argument("full torsion needs m >= 2");
    unsigned long d = form.degree();
    TorsionGroup g{m, m};
    if (d % euler_phi(m) != 0) {
        auto t = excluded(g, Rule::Weil, label_of(form.shape_name(), "weil"));
        t.details.push_back("mu_" + std::to_string(m) + " must lie in K, and phi(" + std::to_string(m) +
                            ") = " + std::to_string(euler_phi(m)) + " does not divide d = " + std::to_string(d));
        return t;
    }
    if (m == 2) {
        ExclusionTrace t = admitted(g, label_of(form.shape_name(), "C2xC2"));
        std::set<unsigned long> orders;
        for (auto const& img : image_fact(2).images)
            orders.insert(build_named_subgroup(img.image, 2).order());
        auto cited = fact_numbers("mod2-image-orders");
        t.citations.push_back("mod2-images");
        t.citations.push_back("mod2-image-orders");
        if (std::set<unsigned long>(cited.begin(), cited.end()) != orders)
            t.divergences.push_back("mod-2 image orders: cited " + fmt_set(cited) + ", computed " + fmt_set(orders));
        auto dividing = intersect(orders, divisors(d));
        t.details.push_back("[Q(E[2]):Q] = |G_E(2)| in " + fmt_set(orders) + ", dividing d = " + std::to_string(d) +
                            ": " + fmt_set(dividing));
        if (dividing.empty()) {
            t.verdict = Verdict::Excluded;
            t.rule = Rule::Divisibility;
        }
        return t;
    }
    // Larger m: inherit from the cyclic part.
    for (auto q : prime_factors(m)) {
        unsigned long qk = q;
        while (m % (qk * q) == 0)
            qk *= q;
        if (qk == 4 || qk == 9) {
            auto sub = exclude_prime_power({1, qk}, form);
            if (sub.verdict == Verdict::Excluded)
                return subgroup_trace(g, sub);
        } else if (qk == q && q > 3) {
            auto sub = exclude_prime(q, form);
            if (sub.verdict == Verdict::Excluded)
                return subgroup_trace(g, sub);
        }
    }
    return admitted(g, label_of(form.shape_name(), g.name()));
}

namespace {

/* C3 x C6 over a degree-2p field: Q(E[3]) is the unique quadratic subfield,
 * so the 2-torsion point lives there too. */
ExclusionTrace c3xc6_two_p(DegreeForm const& form)
{
    TorsionGroup g{3, 6};
    ExclusionTrace t = admitted(g, label_of(form.shape_name(), "C3xC6"));
    unsigned long d = form.degree();
    std::set<unsigned long> orders;
    for (auto const& img : image_fact(3).images)
        orders.insert(build_named_subgroup(img.image, 3).order());
    auto cited = fact_numbers("full-3-torsion-degrees");
    if (std::set<unsigned long>(cited.begin(), cited.end()) != orders)
        t.divergences.push_back("[Q(E[3]):Q]: cited " + fmt_set(cited) + ", computed " + fmt_set(orders));
    auto e3 = intersect(orders, divisors(d));
    auto p2 = intersect(orbit_degree_union(image_fact(2)), divisors(d));
    t.citations = {"mod3-images", "full-3-torsion-degrees", "point-degrees-q2", "single-quadratic-subfield",
                   "mordell-torsion-quadratic"};
    t.details.push_back("[Q(E[3]):Q] in " + fmt_set(orders) + ", dividing d: " + fmt_set(e3));
    t.details.push_back("[Q(P2):Q] dividing d: " + fmt_set(p2));
    bool quadratic_e3 = e3 == std::set<unsigned long>{2};
    bool small_p2 = !p2.empty() && *p2.rbegin() <= 2;
    if (quadratic_e3 && small_p2 && fact_value("single-quadratic-subfield").get<bool>() &&
        !base_degree_set(form).count(g)) {
        t.verdict = Verdict::Excluded;
        t.rule = Rule::CitedExternal;
        t.details.push_back("one quadratic subfield puts Q(P2) inside Q(E[3]), so C3xC6 would occur over a "
                            "quadratic field, where it does not");
    }
    return t;
}

/* Rule for a cyclic C_k in the lattice. */
ExclusionTrace cyclic_trace(unsigned long k, DegreeForm const& form)
{
    TorsionGroup g{1, k};
    if (k == 1)
        return admitted(g, label_of(form.shape_name(), "C1"));
    auto ps = prime_factors(k);
    if (ps.size() == 1 && ps[0] == k)
        return exclude_prime(k, form);
    // Prime-power parts from the bottom up.
    for (auto q : ps) {
        if (auto sub = exclude_prime(q, form); sub.verdict == Verdict::Excluded)
            return subgroup_trace(g, sub);
        for (unsigned long qk = q * q; k % qk == 0; qk *= q) {
            auto sub = exclude_prime_power({1, qk}, form);
            if (sub.verdict == Verdict::Excluded)
                return qk == k ? sub : subgroup_trace(g, sub);
        }
    }
    if (k == 18)
        return exclude_prime_power(g, form);
    return admitted(g, label_of(form.shape_name(), g.name()));
}

ExclusionTrace bicyclic_trace(unsigned long m, unsigned long n, DegreeForm const& form,
                              std::map<TorsionGroup, ExclusionTrace> const& cyclic)
{
    TorsionGroup g{m, n};
    auto full = exclude_full_torsion(m, form);
    if (full.verdict == Verdict::Excluded)
        return n == m ? full : subgroup_trace(g, full);
    if (n == m)
        return full;
    auto it = cyclic.find({1, n});
    ExclusionTrace sub = it != cyclic.end() ? it->second : cyclic_trace(n, form);
    if (sub.verdict == Verdict::Excluded)
        return subgroup_trace(g, sub);
    if (m == 3 && n % 6 == 0 && form.shape == Shape::TwoP) {
        auto t = c3xc6_two_p(form);
        if (t.verdict == Verdict::Excluded)
            return n == 6 ? t : subgroup_trace(g, t);
    }
    return admitted(g, label_of(form.shape_name(), g.name()));
}

}  // namespace

std::set<TorsionGroup> base_degree_set(DegreeForm const& form)
{
    return fact_groups(form.shape == Shape::TwoP ? "mordell-torsion-quadratic" : "mordell-torsion-cubic");
}

std::optional<Witness> realize(TorsionGroup const& group, DegreeForm const& form)
{
    static std::mutex mu;
    static std::map<std::pair<int, TorsionGroup>, Witness> cache;
    auto key = std::make_pair(static_cast<int>(form.shape), group);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto const& specs = witness_specs();
    auto spec = std::find_if(specs.begin(), specs.end(),
                             [&](auto const& s) { return s.shape == form.shape && s.group == group; });
    if (spec == specs.end())
        return std::nullopt;

    std::vector<Rational> coeffs;
    for (long c : spec->poly)
        coeffs.emplace_back(c);
    FieldPtr K = spec->poly.size() == 2 ? rationals() : make_number_field(PolyQ(coeffs), spec->field);
    auto const& a = spec->a;
    auto e = make_curve(CurveModel::over(K, a[0], a[1], a[2], a[3], a[4]));
    Witness w{curve_text(a), spec->field, a, spec->poly, static_cast<unsigned long>(K->degree()),
              compute_torsion(e, K).group};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, w);
    return w;
}

Classification classify(DegreeForm const& form)
{
    Classification out;
    out.form = form;
    unsigned long d = form.degree();
    std::map<TorsionGroup, ExclusionTrace> cyclic;

    auto primes = torsion_prime_set(form);
    for (auto q : primes.candidates)
        cyclic.emplace(TorsionGroup{1, q}, exclude_prime(q, form));

    // Climb each admitted prime until the first excluded power.
    std::vector<std::vector<unsigned long>> powers;
    for (auto q : primes.mordell) {
        std::vector<unsigned long> ladder{1, q};
        for (unsigned long qk = q * q;; qk *= q) {
            auto t = cyclic_trace(qk, form);
            bool stop = t.verdict == Verdict::Excluded;
            cyclic.emplace(TorsionGroup{1, qk}, std::move(t));
            if (stop)
                break;
            ladder.push_back(qk);
        }
        powers.push_back(std::move(ladder));
    }
    std::set<unsigned long> ks{1};
    for (auto const& ladder : powers) {
        std::set<unsigned long> next;
        for (auto k : ks)
            for (auto x : ladder)
                next.insert(k * x);
        ks = std::move(next);
    }
    for (auto k : ks)
        if (!cyclic.count({1, k}))
            cyclic.emplace(TorsionGroup{1, k}, cyclic_trace(k, form));

    std::map<TorsionGroup, ExclusionTrace> all = cyclic;
    for (unsigned long m : {2UL, 3UL})
        for (unsigned long n = m; n <= 12; n += m)
            all.emplace(TorsionGroup{m, n}, bicyclic_trace(m, n, form, cyclic));

    for (auto& [g, t] : all) {
        if (t.verdict == Verdict::Excluded) {
            if (t.anchor.empty() || t.rule == Rule::None)
                throw InconsistentRuleSet(g.name() + " excluded without a rule");
            continue;
        }
        auto w = realize(g, form);
        if (!w)
            throw InconsistentRuleSet(g.name() + " is admitted but has no witness");
        if (w->computed != g)
            throw InconsistentRuleSet(g.name() + " witness " + w->curve + " over " + w->field + " gives " +
                                      w->computed.name());
        if (d % w->field_degree != 0)
            throw InconsistentRuleSet(g.name() + " witness field degree does not divide d");
        t.verdict = Verdict::Realized;
        t.anchor = label_of(form.shape_name(), "realize/" + g.name());
        t.details.push_back("witness " + w->curve + " over " + w->field + " has torsion " + w->computed.name());
        t.witness = std::move(w);
        out.groups.insert(g);
    }
    for (auto& [g, t] : all)
        out.traces.push_back(std::move(t));
    return out;
}

}  // namespace mordell
