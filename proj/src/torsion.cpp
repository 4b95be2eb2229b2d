#include "mordell/torsion.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "fp_poly.hpp"

namespace mordell {

std::string TorsionGroup::name() const
{
    if (m == 1)
        return "C" + std::to_string(n);
    return "C" + std::to_string(m) + "xC" + std::to_string(n);
}

TorsionGroup parse_torsion_group(std::string const& name)
{
    auto num = [&](std::string const& s) {
        if (s.size() < 2 || s[0] != 'C' ||
            !std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(ch); }))
            throw std::invalid_argument("bad group name: " + name);
        return std::stoul(s.substr(1));
    };
    auto x = name.find('x');
    if (x == std::string::npos)
        return {1, num(name)};
    TorsionGroup g{num(name.substr(0, x)), num(name.substr(x + 1))};
    if (g.m == 0 || g.n % g.m != 0)
        throw std::invalid_argument("bad group name: " + name);
    return g;
}

namespace {

unsigned long const climb_cap = 163 * 163;

unsigned long ipow(unsigned long q, unsigned k)
{
    unsigned long r = 1;
    while (k--)
        r *= q;
    return r;
}

LevelEvidence level_search(MordellCurve const& e, DivisionPolynomials& dp, unsigned long k)
{
    LevelEvidence lvl;
    lvl.order = k;
    if (e.has_rational_c()) {
        PolyQ lambda = dp.primitive_rational(k);
        lvl.polynomial_degree = lambda.degree();
        lvl.x_roots = roots_in_field(e.field(), lambda);
    } else {
        PolyNF lambda = dp.primitive(k);
        lvl.polynomial_degree = lambda.degree();
        lvl.x_roots = roots_in_field(lambda);
    }
    for (auto const& x : lvl.x_roots) {
        NFElement y2 = x * x * x + e.c();
        if (y2.is_zero()) {
            lvl.liftable.push_back(true);
            lvl.points.emplace_back(x, y2);
            continue;
        }
        auto y = sqrt_in_field(y2);
        lvl.liftable.push_back(y.has_value());
        if (y) {
            lvl.points.emplace_back(x, *y);
            lvl.points.emplace_back(x, -*y);
        }
    }
    std::sort(lvl.points.begin(), lvl.points.end());
    return lvl;
}

struct PrimePart {
    PrimeEvidence evidence;
    CurvePoint cyclic_generator, second_generator;
};

PrimePart analyze_prime(MordellCurve const& e, unsigned long q,
                        std::vector<ReductionCount> const& reductions)
{
    PrimePart out;
    PrimeEvidence& ev = out.evidence;
    ev.prime = q;
    for (auto const& r : reductions) {
        if (r.p == q)
            continue;
        unsigned v = 0;
        Integer n = r.points;
        while (n % q == 0) {
            n /= q;
            ++v;
        }
        ev.reduction_exponent = ev.reduction_exponent ? std::min(*ev.reduction_exponent, v) : v;
    }

    DivisionPolynomials dp(e);
    unsigned k = 1;
    for (unsigned long order = q;; order *= q, ++k) {
        if (order > climb_cap) {
            ev.stop_reason = "climb cap reached";
            break;
        }
        if (ev.reduction_exponent && k > *ev.reduction_exponent) {
            ev.stop_reason = "excluded by reduction counts";
            break;
        }
        ev.levels.push_back(level_search(e, dp, order));
        if (ev.levels.back().points.empty()) {
            ev.stop_reason = "no points of exact order " + std::to_string(order);
            break;
        }
    }

    unsigned b = 0;
    while (b < ev.levels.size() && !ev.levels[b].points.empty())
        ++b;
    ev.cyclic_exponent = b;
    if (b == 0)
        return out;

    // |E(K)[q^j]| = 1 + #points of exact order q^i for i <= j
    unsigned a = 0;
    unsigned long count = 1;
    for (unsigned j = 1; j <= b; ++j) {
        count += ev.levels[j - 1].points.size();
        if (count == ipow(q, 2 * j))
            a = j;
    }
    if (count != ipow(q, a + b))
        throw std::logic_error("torsion point count " + std::to_string(count) +
                               " is not a group order for q = " + std::to_string(q));
    ev.full_exponent = a;

    out.cyclic_generator = ev.levels[b - 1].points.front();
    if (a == 0)
        return out;
    ev.weil_checked = contains_primitive_root_of_unity(e.field(), ipow(q, a));
    if (!ev.weil_checked)
        throw std::logic_error("full q^a-torsion without the q^a-th roots of unity");

    // The order-q subgroup of <P>; R must avoid it after scaling to order q.
    CurvePoint z = scalar_mul(e, static_cast<long>(ipow(q, b - 1)), out.cyclic_generator);
    std::set<CurvePoint> small;
    for (unsigned long i = 1; i < q; ++i)
        small.insert(scalar_mul(e, static_cast<long>(i), z));
    for (auto const& r : ev.levels[a - 1].points) {
        if (!small.count(scalar_mul(e, static_cast<long>(ipow(q, a - 1)), r))) {
            out.second_generator = r;
            return out;
        }
    }
    throw std::logic_error("no independent second generator found");
}

}  // namespace

std::vector<CurvePoint> torsion_points_of_exact_order(MordellCurve const& e, unsigned long k)
{
    if (k < 2)
        throw EllipticError("exact order must be at least 2");
    DivisionPolynomials dp(e);
    return level_search(e, dp, k).points;
}

std::vector<unsigned long> candidate_prime_set(FieldPtr const& field,
                                               std::optional<std::vector<unsigned long>> const& overrides)
{
    if (overrides) {
        std::vector<unsigned long> v = *overrides;
        for (auto q : v)
            if (q < 2 || !is_probable_prime(Integer(q)))
                throw std::invalid_argument("not a prime: " + std::to_string(q));
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }
    unsigned long d = field->degree();
    if (d <= 3)
        return {2, 3, 5, 7};
    if (d % 2 == 0 && d / 2 >= 5 && is_small_prime(d / 2)) {
        if (d == 10)
            return {2, 3, 5, 7, 11};
        return {2, 3, 5, 7};
    }
    if (d % 3 == 0 && d / 3 >= 5 && is_small_prime(d / 3))
        return {2, 3, 5, 7, 19, 43, 67, 163};
    return {2, 3, 5, 7, 11, 13, 19, 43, 67, 163};
}

std::vector<ReductionCount> reduction_counts(MordellCurve const& e, int how_many)
{
    std::vector<ReductionCount> out;
    if (!e.has_rational_c())
        return out;
    PolyQ const& f = e.field()->defining_polynomial();
    int n = f.degree();
    Integer D = f.denominator();
    // Integral monic model D^n f(y / D).
    std::vector<Integer> model(n + 1);
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
        Rational v = f.coeff(i) * pw;
        model[i] = v.get_num();
        pw *= D;
    }
    Rational c = e.c().rational_value();
    Integer cn = c.get_num(), cd = c.get_den();

    int used = 0;
    for (unsigned long p : small_primes_up_to(2000)) {
        if (used == how_many)
            break;
        if (p < 5 || cn % p == 0 || cd % p == 0 || D % p == 0)
            continue;
        detail::Fp fp(p);
        auto poly = fp.from(model);
        if (fp.gcd(poly, fp.derivative(poly)).size() != 1)
            continue;
        ++used;
        uint64_t cm = fp.mul(fp.reduce(cn), fp.inv(fp.reduce(cd)));
        std::vector<int> is_square(p, 0);
        for (uint64_t y = 0; y < p; ++y)
            is_square[fp.mul(y, y)] = 1;
        long points = 1;
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t v = fp.add(fp.mul(fp.mul(x, x), x), cm);
            points += v == 0 ? 1 : (is_square[v] ? 2 : 0);
        }
        Integer trace = Integer(p) + 1 - points;
        detail::FpPoly leftover;
        auto dd = fp.distinct_degree(poly, n, leftover);
        for (auto const& [deg, prod] : dd) {
            // s_k = alpha^k + beta^k with s_k = trace s_{k-1} - p s_{k-2}
            Integer s0 = 2, s1 = trace;
            for (int k = 1; k < deg; ++k) {
                Integer s2 = trace * s1 - Integer(p) * s0;
                s0 = s1;
                s1 = s2;
            }
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, deg);
            out.push_back({p, deg, q + 1 - s1});
        }
    }
    return out;
}

TorsionReport compute_torsion(MordellCurve const& curve, FieldPtr const& field,
                              TorsionOptions const& options)
{
    MordellCurve e = curve.base_change(field);
    TorsionReport report;
    report.primes = candidate_prime_set(field, options.primes);
    if (options.use_reduction_bound)
        report.reductions = reduction_counts(e);

    std::vector<PrimePart> parts(report.primes.size());
    unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        for (size_t i = 0; i < parts.size(); ++i)
            parts[i] = analyze_prime(e, report.primes[i], report.reductions);
    } else {
        for (size_t start = 0; start < parts.size(); start += workers) {
            std::vector<std::future<PrimePart>> jobs;
            for (size_t i = start; i < std::min(parts.size(), start + workers); ++i)
                jobs.push_back(std::async(std::launch::async, analyze_prime, std::cref(e),
                                          report.primes[i], std::cref(report.reductions)));
            for (size_t i = 0; i < jobs.size(); ++i)
                parts[start + i] = jobs[i].get();
        }
    }

    CurvePoint g1, g2;
    for (auto& part : parts) {
        auto const& ev = part.evidence;
        report.group.n *= ipow(ev.prime, ev.cyclic_exponent);
        report.group.m *= ipow(ev.prime, ev.full_exponent);
        if (ev.cyclic_exponent > 0)
            g1 = add_points(e, g1, part.cyclic_generator);
        if (ev.full_exponent > 0)
            g2 = add_points(e, g2, part.second_generator);
        report.evidence.push_back(std::move(part.evidence));
    }
    if (report.group.n > 1) {
        if (point_order(e, g1, report.group.n) != report.group.n)
            throw std::logic_error("generator order mismatch");
        report.generators.push_back(g1);
    }
    if (report.group.m > 1) {
        if (point_order(e, g2, report.group.m) != report.group.m)
            throw std::logic_error("generator order mismatch");
        report.generators.push_back(g2);
    }
    return report;
}

TorsionGroup rational_torsion_oracle(MordellCurve const& e)
{
    if (!e.field()->is_rationals() || !e.has_rational_c() ||
        e.c().rational_value().get_den() != 1)
        throw std::invalid_argument("the oracle needs an integral c over Q");
    FieldPtr const& K = e.field();
    Integer c = e.c().rational_value().get_num();

    std::vector<CurvePoint> candidates;
    Integer x;
    if (exact_root(-c, 3, x))
        candidates.emplace_back(NFElement(K, Rational(x)), NFElement(K, Rational(0)));
    // y^2 | 432 c^2: build y from halved prime exponents.
    auto fac = factor_integer(Integer(432) * c * c);
    std::vector<Integer> ys{1};
    for (auto const& pe : fac.factors) {
        std::vector<Integer> next;
        for (auto const& y : ys) {
            Integer pk = 1;
            for (unsigned long i = 0; i <= pe.exponent / 2; ++i) {
                next.push_back(y * pk);
                pk *= pe.prime;
            }
        }
        ys = next;
    }
    for (auto const& y : ys) {
        if (exact_root(y * y - c, 3, x)) {
            candidates.emplace_back(NFElement(K, Rational(x)), NFElement(K, Rational(y)));
            candidates.emplace_back(NFElement(K, Rational(x)), NFElement(K, Rational(-y)));
        }
    }
    unsigned long total = 1, two_torsion = 0;
    for (auto const& p : candidates) {
        auto ord = point_order(e, p, 12);
        if (!ord)
            continue;
        ++total;
        if (*ord == 2)
            ++two_torsion;
    }
    if (two_torsion == 3)
        return {2, total / 2};
    return {1, total};
}

}  // namespace mordell
