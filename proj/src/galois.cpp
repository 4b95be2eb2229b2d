#include "mordell/galois.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace mordell {

GL2Matrix mat_mul(GL2Matrix const& x, GL2Matrix const& y, uint32_t p)
{
    uint64_t P = p;
    return {static_cast<uint32_t>((uint64_t(x.a) * y.a + uint64_t(x.b) * y.c) % P),
            static_cast<uint32_t>((uint64_t(x.a) * y.b + uint64_t(x.b) * y.d) % P),
            static_cast<uint32_t>((uint64_t(x.c) * y.a + uint64_t(x.d) * y.c) % P),
            static_cast<uint32_t>((uint64_t(x.c) * y.b + uint64_t(x.d) * y.d) % P)};
}

uint32_t mat_det(GL2Matrix const& x, uint32_t p)
{
    uint64_t P = p;
    return static_cast<uint32_t>((uint64_t(x.a) * x.d % P + P - uint64_t(x.b) * x.c % P) % P);
}

uint32_t epsilon_for(uint32_t p)
{
    if (p == 2 || !is_small_prime(p))
        throw std::invalid_argument("epsilon needs an odd prime");
    if (p % 4 == 3)
        return p - 1;
    std::vector<bool> square(p, false);
    for (uint64_t x = 1; x < p; ++x)
        square[x * x % p] = true;
    for (uint32_t e = 2; e < p; ++e)
        if (!square[e])
            return e;
    throw std::logic_error("no quadratic non-residue");
}

GaloisSubgroup::GaloisSubgroup(uint32_t p, std::string name, std::optional<uint32_t> epsilon,
                               std::vector<GL2Matrix> elements, std::vector<GL2Matrix> generators)
    : p_(p), name_(std::move(name)), epsilon_(epsilon), elements_(std::move(elements)),
      generators_(std::move(generators))
{
    std::sort(elements_.begin(), elements_.end());
}

bool GaloisSubgroup::contains(GL2Matrix const& m) const
{
    return std::binary_search(elements_.begin(), elements_.end(), m);
}

std::vector<std::string> const& subgroup_names()
{
    static std::vector<std::string> const names{"GL2",    "B",      "Cs",     "Cs+",
                                                "Cns",    "Cns+",   "G3",     "3Cs.1.1",
                                                "3B.1.1", "3B.1.2", "B(3)",   "Cs(3)"};
    return names;
}

namespace {

uint64_t key(GL2Matrix const& m, uint64_t p)
{
    return ((m.a * p + m.b) * p + m.c) * p + m.d;
}

GL2Matrix D(uint32_t a, uint32_t b) { return {a, 0, 0, b}; }

/* Group generated by gens, by breadth-first closure. */
std::vector<GL2Matrix> closure(std::vector<GL2Matrix> const& gens, uint32_t p)
{
    std::vector<GL2Matrix> out{GL2Matrix{}};
    std::unordered_set<uint64_t> seen{key(GL2Matrix{}, p)};
    for (size_t i = 0; i < out.size(); ++i) {
        for (auto const& g : gens) {
            GL2Matrix h = mat_mul(out[i], g, p);
            if (seen.insert(key(h, p)).second)
                out.push_back(h);
        }
    }
    return out;
}

/* Certify that the set is a subgroup: grow a generated subgroup greedily and
 * require it to stay inside the set until it exhausts it. Returns the
 * generators used. */
std::vector<GL2Matrix> certify_subgroup(std::vector<GL2Matrix> const& set, uint32_t p,
                                        std::string const& name)
{
    std::unordered_set<uint64_t> members;
    for (auto const& m : set) {
        if (mat_det(m, p) == 0)
            throw std::logic_error(name + ": singular matrix in the set");
        members.insert(key(m, p));
    }
    if (members.size() != set.size())
        throw std::logic_error(name + ": repeated elements");
    std::vector<GL2Matrix> gens;
    std::unordered_set<uint64_t> reached{key(GL2Matrix{}, p)};
    for (auto const& s : set) {
        if (reached.count(key(s, p)))
            continue;
        gens.push_back(s);
        reached.clear();
        for (auto const& h : closure(gens, p)) {
            if (!members.count(key(h, p)))
                throw std::logic_error(name + ": set is not closed under multiplication");
            reached.insert(key(h, p));
        }
        if (reached.size() == set.size())
            break;
    }
    if (reached.size() != set.size() || !members.count(key(GL2Matrix{}, p)))
        throw std::logic_error(name + ": set is not a group");
    return gens;
}

void require(bool ok, std::string const& name, uint32_t p, char const* why)
{
    if (!ok)
        throw IncompatibleNameForPrime(name + " at p = " + std::to_string(p) + ": " + why);
}

}  // namespace

unsigned long closed_form_order(std::string const& name, uint32_t p)
{
    unsigned long q = p;
    if (name == "GL2")
        return (q * q - 1) * (q * q - q);
    if (name == "B" || name == "B(3)")
        return q * (q - 1) * (q - 1);
    if (name == "Cs" || name == "Cs(3)")
        return (q - 1) * (q - 1);
    if (name == "Cs+")
        return 2 * (q - 1) * (q - 1);
    if (name == "Cns")
        return q * q - 1;
    if (name == "Cns+")
        return 2 * (q * q - 1);
    if (name == "G3")
        return 2 * (q - 1) * (q - 1) / 3;
    if (name == "3Cs.1.1")
        return 2;
    if (name == "3B.1.1" || name == "3B.1.2")
        return 6;
    throw std::invalid_argument("unknown subgroup name: " + name);
}

GaloisSubgroup build_named_subgroup(std::string const& name, uint32_t p)
{
    if (std::find(subgroup_names().begin(), subgroup_names().end(), name) == subgroup_names().end())
        throw std::invalid_argument("unknown subgroup name: " + name);
    require(is_small_prime(p), name, p, "p must be prime");
    if (p > 65535)
        throw std::invalid_argument("p too large for explicit groups");

    std::vector<GL2Matrix> elements, gens;
    std::optional<uint32_t> eps;
    GL2Matrix const B{1, 1, 0, 1}, T{0, 1, 1, 0}, J{1, 0, 0, p - 1};

    if (name == "GL2") {
        require(p <= 3, name, p, "only materialized for p <= 3");
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t b = 0; b < p; ++b)
                for (uint32_t c = 0; c < p; ++c)
                    for (uint32_t d = 0; d < p; ++d)
                        if (mat_det({a, b, c, d}, p) != 0)
                            elements.push_back({a, b, c, d});
    } else if (name == "B" || name == "B(3)") {
        require(name == "B" || p == 3, name, p, "needs p = 3");
        std::vector<GL2Matrix> g{B};
        for (uint32_t a = 2; a < p; ++a) {
            g.push_back(D(a, 1));
            g.push_back(D(1, a));
        }
        elements = closure(g, p);
    } else if (name == "3Cs.1.1" || name == "3B.1.1" || name == "3B.1.2") {
        require(p == 3, name, p, "needs p = 3");
        std::vector<GL2Matrix> g;
        if (name == "3Cs.1.1")
            g = {D(1, 2)};
        else if (name == "3B.1.1")
            g = {D(1, 2), B};
        else
            g = {D(2, 1), B};
        elements = closure(g, p);
    } else if (name == "Cs" || name == "Cs+" || name == "Cs(3)") {
        require(p > 2, name, p, "needs an odd prime");
        require(name != "Cs(3)" || p == 3, name, p, "needs p = 3");
        for (uint32_t a = 1; a < p; ++a)
            for (uint32_t b = 1; b < p; ++b) {
                elements.push_back(D(a, b));
                if (name == "Cs+")
                    elements.push_back(mat_mul(T, D(a, b), p));
            }
    } else if (name == "Cns" || name == "Cns+") {
        require(p > 2, name, p, "needs an odd prime");
        eps = epsilon_for(p);
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t b = 0; b < p; ++b) {
                if (a == 0 && b == 0)
                    continue;
                GL2Matrix m{a, static_cast<uint32_t>(uint64_t(b) * *eps % p), b, a};
                elements.push_back(m);
                if (name == "Cns+")
                    elements.push_back(mat_mul(J, m, p));
            }
    } else if (name == "G3") {
        require(p % 3 == 1, name, p, "needs p = 1 mod 3");
        std::set<uint32_t> cubes;
        for (uint64_t b = 1; b < p; ++b)
            cubes.insert(static_cast<uint32_t>(b * b % p * b % p));
        for (uint32_t a = 1; a < p; ++a)
            for (uint32_t c : cubes) {
                GL2Matrix m = D(a, static_cast<uint32_t>(uint64_t(a) * c % p));
                elements.push_back(m);
                elements.push_back(mat_mul(T, m, p));
            }
    }

    gens = certify_subgroup(elements, p, name);
    GaloisSubgroup g(p, name, eps, std::move(elements), std::move(gens));
    if (g.order() != closed_form_order(name, p))
        throw std::logic_error(name + ": order " + std::to_string(g.order()) +
                               " differs from the closed form");
    return g;
}

DegreeSet orbit_degree_set(GaloisSubgroup const& g)
{
    uint64_t p = g.p();
    size_t n = p * p;
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto const& m : g.generators()) {
        for (uint64_t x = 0; x < p; ++x)
            for (uint64_t y = 0; y < p; ++y) {
                if (x == 0 && y == 0)
                    continue;
                uint64_t u = (m.a * x + m.b * y) % p, v = (m.c * x + m.d * y) % p;
                size_t r1 = find(x * p + y), r2 = find(u * p + v);
                if (r1 != r2)
                    parent[r1] = r2;
            }
    }
    std::vector<unsigned long> size(n, 0);
    for (size_t i = 1; i < n; ++i)
        ++size[find(i)];
    DegreeSet out;
    out.group_order = g.order();
    for (size_t i = 1; i < n; ++i)
        if (size[i])
            out.orbit_sizes.push_back(size[i]);
    std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
    out.degrees.insert(out.orbit_sizes.begin(), out.orbit_sizes.end());
    return out;
}

std::vector<Rational> stated_point_degrees(std::string const& name, uint32_t p)
{
    Rational q = p;
    if (name == "Cns+")
        return {q * q - 1};
    if (name == "Cs+")
        return {(q - 1) * (q - 1), 2 * (q - 1)};
    if (name == "G3")
        return {2 * (q - 1), (q - 1) * (q - 1) / 2, 2 * (q - 1) * (q - 1) / 3};
    if (name == "G0")
        return {(q - 1) * (q - 1) / 2, 2 * (q - 1) * (q - 1) / 3};
    throw std::invalid_argument("no stated degree set for " + name);
}

bool LemmaComparison::fully_realized() const
{
    return std::all_of(stated.begin(), stated.end(), [](auto const& s) { return s.second; });
}

bool LemmaComparison::exact_match() const
{
    return fully_realized() &&
           std::all_of(computed.begin(), computed.end(), [](auto const& s) { return s.second; });
}

LemmaComparison verify_lemma_degrees(std::string const& name, uint32_t p)
{
    if (name != "Cns+" && name != "Cs+" && name != "G3")
        throw std::invalid_argument("no degree lemma for " + name);
    auto g = build_named_subgroup(name, p);
    auto ds = orbit_degree_set(g);
    LemmaComparison out{name, p, g.order(), {}, {}};
    auto stated = stated_point_degrees(name, p);
    for (auto const& s : stated)
        out.stated.emplace_back(s, s.get_den() == 1 && ds.degrees.count(s.get_num().get_ui()) > 0);
    for (auto d : ds.degrees)
        out.computed.emplace_back(d, std::find(stated.begin(), stated.end(), Rational(d)) != stated.end());
    return out;
}

}  // namespace mordell
