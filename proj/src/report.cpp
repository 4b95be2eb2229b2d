#include "mordell/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "mordell/factor.hpp"

namespace mordell {

namespace {

template <class Range>
std::string braces(Range const& r)
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

std::string group_set_text(std::set<TorsionGroup> const& gs)
{
    std::vector<std::string> names;
    for (auto const& g : gs)
        names.push_back(g.name());
    return braces(names);
}

std::string ratio(int ok, int total)
{
    return std::to_string(ok) + "/" + std::to_string(total);
}

FieldPtr field_of(std::initializer_list<long> c, std::string label)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return make_number_field(PolyQ(std::move(v)), std::move(label));
}

FieldPtr sqrt2() { return field_of({-2, 0, 1}, "Q(sqrt2)"); }
FieldPtr sqrt3() { return field_of({-3, 0, 1}, "Q(sqrt3)"); }
FieldPtr zeta3() { return field_of({1, 1, 1}, "Q(zeta3)"); }
FieldPtr cubic() { return field_of({1, 0, -3, 1}, "Q(x0)"); }

std::string torsion_name(FieldPtr const& K, long a1, long a2, long a3, long a4, long a6)
{
    auto e = make_curve(CurveModel::over(K, a1, a2, a3, a4, a6));
    return compute_torsion(e, K).group.name();
}

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

std::vector<CurvePoint> sample_points(MordellCurve const& e, int want)
{
    std::vector<CurvePoint> out;
    FieldPtr const& K = e.field();
    for (long num = -40; num <= 40 && static_cast<int>(out.size()) < want; ++num)
        for (long den : {1L, 4L}) {
            if (den == 4 && num % 2 == 0)
                continue;
            NFElement x(K, Rational(num, den));
            auto y = sqrt_in_field(x * x * x + e.c());
            if (y && !y->is_zero()) {
                out.emplace_back(x, *y);
                out.emplace_back(x, -*y);
            }
        }
    return out;
}

std::string group_law_suite(MordellCurve const& e, uint64_t seed)
{
    auto pts = sample_points(e, 6);
    if (pts.size() < 2)
        return "no sample points";
    pts.push_back(scalar_mul(e, 2, pts[0]));
    pts.push_back(add_points(e, pts[0], pts.back()));
    pts.push_back(CurvePoint::infinity());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    std::uniform_int_distribution<long> mult(-3, 3);
    int ok = 0;
    for (int i = 0; i < 200; ++i) {
        auto a = scalar_mul(e, mult(rng), pts[pick(rng)]);
        auto b = scalar_mul(e, mult(rng), pts[pick(rng)]);
        auto c = pts[pick(rng)];
        bool good = add_points(e, a, b) == add_points(e, b, a) &&
                    add_points(e, add_points(e, a, b), c) == add_points(e, a, add_points(e, b, c));
        ok += good;
    }
    return ratio(ok, 200);
}

std::string inverse_suite(FieldPtr const& K, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    NFElement one(K, Rational(1));
    int ok = 0, total = 0;
    while (total < 1000) {
        auto a = random_element(K, rng);
        if (a.is_zero())
            continue;
        ++total;
        ok += a * a.inverse() == one;
    }
    return ratio(ok, total);
}

std::string factor_suite_q(uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-9, 9);
    int ok = 0, total = 0;
    for (int i = 0; i < 20; ++i) {
        PolyQ f{1};
        for (int j = 0; j < 1 + i % 4; ++j) {
            std::vector<Rational> c;
            for (int k = 0; k < 1 + (i + j) % 4; ++k)
                c.emplace_back(d(rng));
            c.emplace_back(1 + std::abs(d(rng)) % 3);
            f = f * PolyQ(c);
        }
        auto fac = factor_poly_q(f);
        ++total;
        bool good = fac.product() == f;
        for (auto const& [h, e] : fac.factors)
            good = good && is_irreducible(h);
        ok += good;
    }
    return ratio(ok, total);
}

std::string factor_suite_nf(FieldPtr const& K, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    NFElement one(K, Rational(1));
    int ok = 0, total = 0;
    for (int i = 0; i < 6; ++i) {
        PolyNF f(K, std::vector<NFElement>{one});
        for (int j = 0; j < 1 + i % 3; ++j) {
            std::vector<NFElement> c;
            for (int k = 0; k < 1 + (i + j) % 3; ++k)
                c.push_back(random_element(K, rng));
            c.push_back(one);
            f = f * PolyNF(K, c);
        }
        auto fac = factor_poly_nf(f);
        ++total;
        int degree = 0;
        for (auto const& [h, e] : fac.factors)
            degree += h.degree() * static_cast<int>(e);
        ok += fac.product() == f && degree == f.degree();
    }
    return ratio(ok, total);
}

std::string orbit_suite()
{
    std::vector<std::pair<std::string, uint32_t>> cases;
    for (auto const& name : {"3Cs.1.1", "Cs(3)", "3B.1.1", "3B.1.2", "B(3)", "GL2"})
        cases.emplace_back(name, 3);
    cases.emplace_back("GL2", 2);
    cases.emplace_back("B", 2);
    for (uint32_t p : {5u, 7u, 11u, 13u, 19u, 43u})
        for (auto const& name : {"B", "Cs", "Cs+", "Cns", "Cns+", "G3"})
            if (std::string(name) != "G3" || p % 3 == 1)
                cases.emplace_back(name, p);
    int ok = 0;
    for (auto const& [name, p] : cases) {
        auto g = build_named_subgroup(name, p);
        auto ds = orbit_degree_set(g);
        unsigned long total = 0;
        bool good = true;
        for (auto s : ds.orbit_sizes) {
            good = good && g.order() % s == 0;
            total += s;
        }
        ok += good && total == static_cast<unsigned long>(p) * p - 1;
    }
    return ratio(ok, static_cast<int>(cases.size()));
}

std::string classification_is_decisive(Classification const& c)
{
    for (auto const& t : c.traces) {
        if (t.verdict == Verdict::Excluded) {
            if (t.anchor.empty() || t.rule == Rule::None)
                return t.candidate.name() + " lacks an anchor";
        } else if (!t.witness || t.witness->computed != t.candidate) {
            return t.candidate.name() + " lacks a verified witness";
        }
    }
    return "every trace decisive";
}

struct Spec {
    std::string id;
    int criterion;
    std::string desc;
    std::string expected;
    std::function<std::string()> run;
};

std::vector<Spec> check_specs()
{
    std::vector<Spec> s;

    s.push_back({"1.1", 1, "psi_3 for c = 27 factors over Q", "3 * (x) * (x^3 + 108)", [] {
                     DivisionPolynomials dp(MordellCurve(rationals(), Rational(27)));
                     return factorization_text(dp.get_rational(3));
                 }});
    s.push_back({"1.2", 1, "primitive 9-division polynomial for c = 4: degree", "36", [] {
                     DivisionPolynomials dp(MordellCurve(rationals(), Rational(4)));
                     return std::to_string(dp.primitive_rational(9).degree());
                 }});
    s.push_back({"1.3", 1, "primitive 9-division polynomial for c = 4: irreducible factor degrees", "{9, 27}", [] {
                     DivisionPolynomials dp(MordellCurve(rationals(), Rational(4)));
                     auto degs = factor_poly_q(dp.primitive_rational(9)).degrees();
                     return braces(std::set<int>(degs.begin(), degs.end()));
                 }});

    s.push_back({"2.1", 2, "x(2P)^3 + 1 with c = 1, denominators cleared", "(x^6 + 20*x^3 - 8)^2", [] {
                     PolyQ x = PolyQ::x();
                     PolyQ num = x * (x * x * x - PolyQ(Rational(8)));
                     PolyQ den = Rational(4) * (x * x * x + PolyQ(Rational(1)));
                     PolyQ cleared = num * num * num + den * den * den;
                     // Leading coefficient 1, so the squarefree part is the square root when one exists.
                     PolyQ root = squarefree_part(cleared);
                     if (root * root != cleared)
                         return to_string(cleared);
                     return "(" + to_string(root) + ")^2";
                 }});
    s.push_back({"2.2", 2, "duplication formula agrees with point doubling on c = 1 over Q(sqrt2)", "true", [] {
                     MordellCurve e(sqrt2(), Rational(1));
                     auto pts = sample_points(e, 8);
                     int checked = 0;
                     for (long a = -6; a <= 6; ++a)
                         for (auto const& p : pts) {
                             auto q = add_points(e, scalar_mul(e, a, pts.back()), p);
                             if (q.is_infinity() || q.y().is_zero())
                                 continue;
                             if (duplication_x(e, q.x()) != add_points(e, q, q).x())
                                 return std::string("false");
                             ++checked;
                         }
                     return std::string(checked >= 20 ? "true" : "too few points");
                 }});
    s.push_back({"2.3", 2, "cubes of the roots of x^6 + 20x^3 - 8 in Q(sqrt3) (s = sqrt3)", "{6*s - 10, -6*s - 10}",
                 [] {
                     auto K = sqrt3();
                     auto roots = roots_in_field(K, PolyQ{-8, 0, 0, 20, 0, 0, 1});
                     std::set<NFElement> cubes;
                     for (auto const& r : roots)
                         cubes.insert(r * r * r);
                     std::vector<std::string> txt;
                     for (auto const& c : cubes)
                         txt.push_back(to_string(c, "s"));
                     return roots.size() == 2 ? braces(txt) : "root count " + std::to_string(roots.size());
                 }});
    s.push_back({"2.4", 2, "x^6 + 20x^3 - 8 has no rational root", "true",
                 [] { return std::string(rational_roots(PolyQ{-8, 0, 0, 20, 0, 0, 1}).empty() ? "true" : "false"); }});

    struct T {
        std::string id, desc, expected;
        std::function<FieldPtr()> field;
        std::array<long, 5> a;
    };
    std::vector<T> torsions{
        {"3.1", "torsion of y^2 = x^3 + 27 over Q(sqrt2)", "C2", sqrt2, {0, 0, 0, 0, 27}},
        {"3.2", "torsion of y^2 = x^3 + 16 over Q(sqrt2)", "C3", sqrt2, {0, 0, 0, 0, 16}},
        {"3.3", "torsion of y^2 = x^3 + 1 over Q(sqrt2)", "C6", sqrt2, {0, 0, 0, 0, 1}},
        {"3.4", "torsion of y^2 = x^3 - 27 over Q(zeta3)", "C2xC6", zeta3, {0, 0, 0, 0, -27}},
        {"3.5", "torsion of y^2 + y = x^3 over Q(zeta3)", "C3xC3", zeta3, {0, 0, 1, 0, 0}},
        {"3.6", "torsion of y^2 = x^3 - 1 over Q(zeta3)", "C2xC2", zeta3, {0, 0, 0, 0, -1}},
        {"3.7", "torsion of y^2 = x^3 + 4 over Q", "C3", rationals, {0, 0, 0, 0, 4}},
        {"3.8", "torsion of y^2 = x^3 + 16 over Q(x0), x0^3 - 3x0^2 + 1 = 0", "C9", cubic, {0, 0, 0, 0, 16}},
        {"3.9", "torsion of y^2 = x^3 + 1 over Q(x0)", "C6", cubic, {0, 0, 0, 0, 1}},
    };
    for (auto const& t : torsions)
        s.push_back({t.id, 3, t.desc, t.expected,
                     [t] { return torsion_name(t.field(), t.a[0], t.a[1], t.a[2], t.a[3], t.a[4]); }});

    s.push_back({"4.1", 4, "compute_torsion equals the Lutz-Nagell oracle for sixth-power-free 0 < |c| <= 50",
                 "100/100", [] {
                     int ok = 0, total = 0;
                     for (long c = -50; c <= 50; ++c) {
                         if (c == 0 || sixth_power_free_decompose(Rational(c)).c1 != c)
                             continue;
                         MordellCurve e(rationals(), Rational(c));
                         ++total;
                         ok += compute_torsion(e, rationals()).group == rational_torsion_oracle(e);
                     }
                     return ratio(ok, total);
                 }});
    s.push_back({"4.2", 4, "every torsion group over Q for 0 < |c| <= 50 lies in the known list",
                 "{C1, C2, C3, C6}", [] {
                     std::set<TorsionGroup> seen;
                     for (long c = -50; c <= 50; ++c)
                         if (c != 0)
                             seen.insert(compute_torsion(MordellCurve(rationals(), Rational(c)), rationals()).group);
                     std::set<TorsionGroup> allowed{{1, 1}, {1, 2}, {1, 3}, {1, 6}};
                     for (auto const& g : seen)
                         if (!allowed.count(g))
                             return "outside: " + g.name();
                     return group_set_text(seen);
                 }});

    for (uint32_t p : {5u, 11u, 163u})
        s.push_back({"5.cns+." + std::to_string(p), 5, "orbit sizes of Cns+(" + std::to_string(p) + ")",
                     "[" + std::to_string(p * p - 1) + "]", [p] {
                         auto ds = orbit_degree_set(build_named_subgroup("Cns+", p));
                         return json(ds.orbit_sizes).dump();
                     }});
    for (uint32_t p : {7u, 19u, 163u}) {
        unsigned long q = p;
        std::set<unsigned long> want{2 * (q - 1), (q - 1) * (q - 1)};
        s.push_back({"5.cs+." + std::to_string(p), 5, "orbit-size set of Cs+(" + std::to_string(p) + ")",
                     braces(want), [p] { return braces(orbit_degree_set(build_named_subgroup("Cs+", p)).degrees); }});
    }
    s.push_back({"5.mod3", 5, "orders of the named mod-3 subgroups", "{2, 4, 6, 12}", [] {
                     std::set<unsigned long> orders;
                     for (auto const& name : {"3Cs.1.1", "Cs(3)", "3B.1.1", "3B.1.2", "B(3)"})
                         orders.insert(build_named_subgroup(name, 3).order());
                     return braces(orders);
                 }});
    s.push_back({"5.mod2", 5, "orders of GL2(F2) and B(2)", "6, 2", [] {
                     return std::to_string(build_named_subgroup("GL2", 2).order()) + ", " +
                            std::to_string(build_named_subgroup("B", 2).order());
                 }});

    for (auto const& shape : {"2p", "3p"}) {
        std::string want = std::string(shape) == "2p" ? "{C1, C2, C3, C6, C2xC2, C2xC6, C3xC3}"
                                                      : "{C1, C2, C3, C6, C9}";
        for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
            std::string id = "6." + std::string(shape) + "." + (p < 10 ? "0" : "") + std::to_string(p);
            s.push_back({id, 6, "classify(" + std::string(shape) + ", " + std::to_string(p) + ")", want,
                         [shape, p] { return group_set_text(classify(make_degree_form(shape, p)).groups); }});
        }
        s.push_back({"6." + std::string(shape) + ".traces", 6,
                     "witnesses verified and exclusions anchored for " + std::string(shape), "every trace decisive",
                     [shape] { return classification_is_decisive(classify(make_degree_form(shape, 7))); }});
    }

    s.push_back({"7.group-law.1", 7, "associativity and commutativity, y^2 = x^3 - 2 over Q", "200/200",
                 [] { return group_law_suite(MordellCurve(rationals(), Rational(-2)), 12); }});
    s.push_back({"7.group-law.2", 7, "associativity and commutativity, y^2 = x^3 + 7 over Q(sqrt2)", "200/200",
                 [] { return group_law_suite(MordellCurve(sqrt2(), Rational(7)), 13); }});
    s.push_back({"7.group-law.3", 7, "associativity and commutativity, y^2 = x^3 - 11 over Q(zeta3)", "200/200",
                 [] { return group_law_suite(MordellCurve(zeta3(), Rational(-11)), 14); }});
    std::vector<std::pair<std::string, std::function<FieldPtr()>>> fields{
        {"Q", rationals}, {"Q(sqrt2)", sqrt2}, {"Q(zeta3)", zeta3}, {"Q(x0)", cubic}};
    int k = 1;
    for (auto const& [name, make] : fields) {
        auto mk = make;
        uint64_t seed = 100 + k;
        s.push_back({"7.inverse." + std::to_string(k), 7, "a * a^-1 = 1 over " + name, "1000/1000",
                     [mk, seed] { return inverse_suite(mk(), seed); }});
        ++k;
    }
    s.push_back({"7.factor.1", 7, "factorization round trip over Q", "20/20", [] { return factor_suite_q(7); }});
    k = 2;
    for (auto const& [name, make] : fields) {
        if (name == "Q")
            continue;
        auto mk = make;
        uint64_t seed = 200 + k;
        s.push_back({"7.factor." + std::to_string(k), 7, "factorization round trip over " + name, "6/6",
                     [mk, seed] { return factor_suite_nf(mk(), seed); }});
        ++k;
    }
    s.push_back({"7.orbits", 7, "orbit sizes divide the order and sum to p^2 - 1", "42/42", [] { return orbit_suite(); }});
    return s;
}

}  // namespace

json poly_to_json(PolyQ const& p)
{
    return to_coefficient_strings(p);
}

PolyQ poly_from_json(json const& j)
{
    std::vector<std::string> c;
    for (auto const& x : j)
        c.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return from_coefficient_strings(c);
}

json field_to_json(FieldPtr const& field)
{
    return {{"defining_polynomial", poly_to_json(field->defining_polynomial())}, {"label", field->label()}};
}

FieldPtr field_from_json(json const& j)
{
    auto f = poly_from_json(j.at("defining_polynomial"));
    if (f.degree() == 1 && f.coeff(0) == 0)
        return rationals();
    return make_number_field(f, j.value("label", std::string()));
}

json element_to_json(NFElement const& a)
{
    auto c = to_coefficient_strings(a.residue());
    if (c.empty())
        c.push_back("0");
    return c;
}

NFElement element_from_json(FieldPtr const& field, json const& j)
{
    if (j.is_string())
        return NFElement(field, parse_rational(j.get<std::string>()));
    if (j.is_number_integer())
        return NFElement(field, Rational(j.get<long>()));
    return NFElement(field, poly_from_json(j));
}

json point_to_json(CurvePoint const& p)
{
    if (p.is_infinity())
        return "infinity";
    return {{"x", element_to_json(p.x())}, {"y", element_to_json(p.y())}};
}

MordellCurve curve_from_json(json const& j)
{
    FieldPtr K = j.contains("field") ? field_from_json(j.at("field")) : rationals();
    if (j.contains("c"))
        return MordellCurve(K, element_from_json(K, j.at("c")));
    if (j.contains("long")) {
        auto const& l = j.at("long");
        auto get = [&](char const* key) {
            return l.contains(key) ? element_from_json(K, l.at(key)) : NFElement(K, Rational(0));
        };
        return make_curve(CurveModel{get("a1"), get("a2"), get("a3"), get("a4"), get("a6")});
    }
    throw std::invalid_argument("curve JSON needs \"c\" or \"long\"");
}

json torsion_report_to_json(TorsionReport const& r)
{
    json out;
    out["group"] = {{"m", r.group.m}, {"n", r.group.n}, {"name", r.group.name()}};
    out["generators"] = json::array();
    for (auto const& g : r.generators)
        out["generators"].push_back(point_to_json(g));
    out["primes"] = r.primes;
    json ev = json::object();
    for (auto const& e : r.evidence) {
        json levels = json::array();
        for (auto const& l : e.levels) {
            json roots = json::array(), pts = json::array();
            for (auto const& x : l.x_roots)
                roots.push_back(element_to_json(x));
            for (auto const& p : l.points)
                pts.push_back(point_to_json(p));
            levels.push_back({{"order", l.order},
                              {"polynomial_degree", l.polynomial_degree},
                              {"x_roots", roots},
                              {"liftable", l.liftable},
                              {"points", pts}});
        }
        json one{{"levels", levels},
                 {"stop_reason", e.stop_reason},
                 {"full_exponent", e.full_exponent},
                 {"cyclic_exponent", e.cyclic_exponent},
                 {"weil_checked", e.weil_checked}};
        one["reduction_exponent"] = e.reduction_exponent ? json(*e.reduction_exponent) : json(nullptr);
        ev[std::to_string(e.prime)] = one;
    }
    out["evidence"] = ev;
    out["reductions"] = json::array();
    for (auto const& c : r.reductions)
        out["reductions"].push_back({{"p", c.p}, {"residue_degree", c.residue_degree}, {"points", to_string(c.points)}});
    return out;
}

json trace_to_json(ExclusionTrace const& t)
{
    json out{{"candidate", t.candidate.name()},
             {"verdict", to_string(t.verdict)},
             {"rule", to_string(t.rule)},
             {"anchor", t.anchor},
             {"details", t.details},
             {"citations", t.citations},
             {"divergences", t.divergences}};
    if (!t.obstruction.empty())
        out["obstruction"] = t.obstruction;
    if (t.witness) {
        auto const& w = *t.witness;
        out["witness"] = {{"curve", w.curve},
                          {"a_invariants", w.a_invariants},
                          {"field", w.field},
                          {"field_polynomial", w.field_polynomial},
                          {"field_degree", w.field_degree},
                          {"computed", w.computed.name()}};
    }
    return out;
}

json classification_to_json(Classification const& c)
{
    json groups = json::array();
    for (auto const& g : c.groups)
        groups.push_back(g.name());
    json traces = json::array();
    for (auto const& t : c.traces)
        traces.push_back(trace_to_json(t));
    auto primes = torsion_prime_set(c.form);
    return {{"shape", c.form.shape_name()},
            {"p", c.form.p},
            {"degree", c.form.degree()},
            {"candidate_primes", primes.candidates},
            {"mordell_primes", primes.mordell},
            {"groups", groups},
            {"traces", traces}};
}

json degree_set_to_json(GaloisSubgroup const& g, DegreeSet const& d)
{
    return {{"group", g.name()},
            {"p", g.p()},
            {"order", g.order()},
            {"orbit_sizes", d.orbit_sizes},
            {"degrees", d.degrees}};
}

json lemma_comparison_to_json(LemmaComparison const& c)
{
    json stated = json::array(), computed = json::array();
    for (auto const& [v, ok] : c.stated)
        stated.push_back({{"value", to_string(v)}, {"realized", ok}});
    for (auto const& [v, ok] : c.computed)
        computed.push_back({{"value", v}, {"stated", ok}});
    return {{"group", c.name},
            {"p", c.p},
            {"order", c.group_order},
            {"stated", stated},
            {"computed", computed},
            {"exact_match", c.exact_match()}};
}

std::string factorization_text(PolyQ const& f)
{
    auto fac = factor_poly_q(f);
    std::string out = fac.leading == 1 ? "" : to_string(fac.leading);
    for (auto const& [h, e] : fac.factors) {
        if (!out.empty())
            out += " * ";
        out += "(" + to_string(h) + ")";
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

int VerificationReport::passed() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](auto const& c) { return c.pass; }));
}

int VerificationReport::failed() const
{
    return static_cast<int>(checks.size()) - passed();
}

bool VerificationReport::criterion_passes(int criterion) const
{
    bool any = false;
    for (auto const& c : checks)
        if (c.criterion == criterion) {
            any = true;
            if (!c.pass)
                return false;
        }
    return any;
}

VerificationReport verify_paper(VerifyOptions const& options)
{
    auto specs = check_specs();
    std::vector<Spec> chosen;
    for (auto& s : specs)
        if (s.id.rfind(options.only, 0) == 0)
            chosen.push_back(std::move(s));

    VerificationReport report;
    report.checks.resize(chosen.size());
    auto run_one = [&](size_t i) {
        auto const& s = chosen[i];
        Check c{s.id, s.criterion, s.desc, s.expected, {}, false, 0};
        auto start = std::chrono::steady_clock::now();
        try {
            c.computed = s.run();
        } catch (std::exception const& e) {
            c.computed = std::string("error: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        c.ms = options.timings ? static_cast<long>(ms.count()) : 0;
        c.pass = c.computed == c.expected;
        report.checks[i] = std::move(c);
    };
    unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        for (size_t i = 0; i < chosen.size(); ++i)
            run_one(i);
    } else {
        for (size_t start = 0; start < chosen.size(); start += workers) {
            std::vector<std::future<void>> batch;
            for (size_t i = start; i < std::min(chosen.size(), start + workers); ++i)
                batch.push_back(std::async(std::launch::async, run_one, i));
            for (auto& f : batch)
                f.get();
        }
    }
    return report;
}

json report_to_json(VerificationReport const& r)
{
    json checks = json::array();
    for (auto const& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"desc", c.desc},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", c.pass ? "PASS" : "FAIL"},
                          {"ms", c.ms}});
    return {{"checks", checks}, {"summary", {{"pass", r.passed()}, {"fail", r.failed()}}}};
}

std::vector<std::string> const& criterion_titles()
{
    static std::vector<std::string> const titles{
        "division-polynomial vectors",
        "duplication identity",
        "torsion over explicit fields",
        "oracle equivalence over Q",
        "Galois orbit lemmas",
        "classification of the 2p and 3p sets",
        "property suites",
    };
    return titles;
}

}  // namespace mordell
