#include "mordell/factor.hpp"

#include <algorithm>
#include <functional>

#include "fp_poly.hpp"

namespace mordell {

namespace {

using ZPoly = std::vector<Integer>;
using detail::Fp;
using detail::FpPoly;

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zreduce(ZPoly a, Integer const& m)
{
    for (auto& c : a)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zmul(ZPoly const& a, ZPoly const& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

ZPoly zmulmod(ZPoly const& a, ZPoly const& b, Integer const& m)
{
    return zreduce(zmul(a, b), m);
}

ZPoly zadd(ZPoly const& a, ZPoly const& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] += b[i];
    }
    ztrim(r);
    return r;
}

ZPoly zsub(ZPoly const& a, ZPoly const& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] -= b[i];
    }
    ztrim(r);
    return r;
}

/* Division by a monic b with coefficients reduced mod m. */
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly const& a, ZPoly const& b, Integer const& m)
{
    if (a.size() < b.size())
        return {{}, zreduce(a, m)};
    ZPoly r = zreduce(a, m);
    r.resize(a.size());
    size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (size_t i = q.size(); i-- > 0;) {
        Integer f = r[i + db];
        mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
        q[i] = f;
        if (f == 0)
            continue;
        for (size_t j = 0; j <= db; ++j) {
            mpz_submul(r[i + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
        }
        for (size_t j = 0; j <= db; ++j)
            mpz_fdiv_r(r[i + j].get_mpz_t(), r[i + j].get_mpz_t(), m.get_mpz_t());
    }
    r.resize(db);
    return {zreduce(q, m), zreduce(r, m)};
}

/* Exact division over Z by a monic divisor; false if not exact. */
bool zdivides_monic(ZPoly const& a, ZPoly const& b, ZPoly& quotient)
{
    if (a.size() < b.size())
        return false;
    ZPoly r = a;
    size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (size_t i = q.size(); i-- > 0;) {
        Integer f = r[i + db];
        q[i] = f;
        if (f == 0)
            continue;
        for (size_t j = 0; j <= db; ++j)
            mpz_submul(r[i + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    }
    for (size_t j = 0; j < db; ++j)
        if (r[j] != 0)
            return false;
    quotient = std::move(q);
    ztrim(quotient);
    return true;
}

ZPoly to_zpoly(FpPoly const& a)
{
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

ZPoly symmetric(ZPoly a, Integer const& m)
{
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half)
            c -= m;
    }
    ztrim(a);
    return a;
}

/* One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
 * Afterwards the same relations hold mod m^2. */
void hensel_step(ZPoly const& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, Integer const& m)
{
    Integer m2 = m * m;
    ZPoly e = zreduce(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
    ZPoly g2 = zreduce(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
    ZPoly h2 = zreduce(zadd(h, r), m2);
    ZPoly b = zreduce(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), m2);
    auto [c, d] = zdivmod_monic(zmul(s, b), h2, m2);
    ZPoly s2 = zreduce(zsub(s, d), m2);
    ZPoly t2 = zreduce(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
}

/* Lifts f = prod(locals) mod l to a factorization mod l^k (= target). */
std::vector<ZPoly> lift_all(ZPoly const& f, std::vector<FpPoly> const& locals, Fp const& fp,
                            unsigned long k, Integer const& target)
{
    if (locals.size() == 1) {
        ZPoly r = zreduce(f, target);
        return {r};
    }
    size_t half = locals.size() / 2;
    std::vector<FpPoly> left(locals.begin(), locals.begin() + half);
    std::vector<FpPoly> right(locals.begin() + half, locals.end());
    FpPoly a{1}, b{1};
    for (auto const& u : left)
        a = fp.mul(a, u);
    for (auto const& u : right)
        b = fp.mul(b, u);
    FpPoly gg, ss, tt;
    fp.xgcd(a, b, gg, ss, tt);
    ZPoly g = to_zpoly(a), h = to_zpoly(b), s = to_zpoly(ss), t = to_zpoly(tt);
    Integer m = static_cast<unsigned long>(fp.p());
    unsigned long e = 1;
    while (e < k) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
        e *= 2;
    }
    g = zreduce(g, target);
    h = zreduce(h, target);
    auto lg = lift_all(g, left, fp, k, target);
    auto lh = lift_all(h, right, fp, k, target);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

struct LocalData {
    unsigned long prime = 0;
    std::vector<FpPoly> factors;  // irreducible, relevant ones
    FpPoly leftover;              // product of ignored factors (restricted mode)
    size_t score = 0;
};

bool squarefree_mod(ZPoly const& g, Fp const& fp, FpPoly& gp)
{
    gp = fp.from(g);
    if (gp.size() != g.size())
        return false;
    FpPoly d = fp.derivative(gp);
    if (d.empty())
        return false;
    return fp.gcd(gp, d).size() == 1;
}

/* Monic squarefree integer polynomial with nonzero constant term.
 * max_degree < 0 means a complete factorization. */
std::vector<ZPoly> zassenhaus(ZPoly const& G, int max_degree)
{
    int n = static_cast<int>(G.size()) - 1;
    bool full = max_degree < 0 || max_degree >= n;
    int dcap = full ? n : max_degree;
    if (n == 1)
        return {G};

    std::mt19937_64 rng(0x5eed1234ULL);
    LocalData best;
    int good = 0;
    for (unsigned long l : small_primes_up_to(4000)) {
        if (l == 2)
            continue;
        Fp fp(l);
        FpPoly gp;
        if (!squarefree_mod(G, fp, gp))
            continue;
        FpPoly leftover;
        auto ddf = fp.distinct_degree(gp, dcap, leftover);
        size_t count = 0;
        for (auto const& [d, part] : ddf)
            count += (part.size() - 1) / d;
        if (full && count == 1)
            return {G};  // irreducible mod l
        if (!full && count == 0)
            return {};
        if (best.prime == 0 || count < best.score) {
            best.prime = l;
            best.score = count;
            best.factors.clear();
            for (auto const& [d, part] : ddf) {
                auto split = fp.equal_degree(part, d, rng);
                best.factors.insert(best.factors.end(), split.begin(), split.end());
            }
            best.leftover = leftover;
        }
        if (++good >= 8)
            break;
    }
    if (best.prime == 0)
        throw ArithmeticError("factorization: no good prime found");

    Fp fp(best.prime);
    // Mignotte: every factor of degree <= dcap has coefficients below
    // 2^dcap * ||G||_2.
    Integer norm2 = 0;
    for (auto const& c : G)
        norm2 += c * c;
    Integer norm = sqrt(norm2) + 1;
    Integer bound = norm << (dcap + 1);
    Integer lp = static_cast<unsigned long>(best.prime);
    Integer target = lp;
    unsigned long k = 1;
    while (target <= bound) {
        target *= lp;
        ++k;
    }

    std::vector<FpPoly> locals = best.factors;
    bool has_leftover = best.leftover.size() > 1;
    if (has_leftover)
        locals.push_back(best.leftover);
    std::vector<ZPoly> lifted = lift_all(G, locals, fp, k, target);
    if (has_leftover)
        lifted.pop_back();

    std::vector<ZPoly> out;
    ZPoly current = G;
    std::vector<bool> used(lifted.size(), false);
    std::vector<int> degs(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i)
        degs[i] = static_cast<int>(lifted[i].size()) - 1;

    auto remaining = [&]() {
        size_t r = 0;
        for (bool u : used)
            r += !u;
        return r;
    };

    // Try all subsets of unused local factors of a given size whose degree
    // sum stays within dcap; the first true divisor found is taken.
    auto try_size = [&](size_t s) -> bool {
        std::vector<size_t> idx;
        std::function<bool(size_t, int, Integer const&)> rec =
            [&](size_t start, int deg, Integer const& c0) -> bool {
            if (idx.size() == s) {
                Integer lc0 = c0;
                Integer half = target / 2;
                if (lc0 > half)
                    lc0 -= target;
                if (lc0 == 0 || !mpz_divisible_p(current[0].get_mpz_t(), lc0.get_mpz_t()))
                    return false;
                ZPoly cand{Integer(1)};
                for (size_t i : idx)
                    cand = zmulmod(cand, lifted[i], target);
                cand = symmetric(cand, target);
                ZPoly q;
                if (!zdivides_monic(current, cand, q))
                    return false;
                out.push_back(cand);
                current = std::move(q);
                for (size_t i : idx)
                    used[i] = true;
                return true;
            }
            int still = static_cast<int>(s - idx.size()) - 1;
            for (size_t i = start; i < lifted.size(); ++i) {
                if (used[i] || deg + degs[i] + still > dcap)
                    continue;
                idx.push_back(i);
                Integer c = c0 * lifted[i][0];
                mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), target.get_mpz_t());
                bool ok = rec(i + 1, deg + degs[i], c);
                idx.pop_back();
                if (ok)
                    return true;
            }
            return false;
        };
        return rec(0, 0, Integer(1));
    };

    size_t s = 1;
    while (true) {
        size_t r = remaining();
        if (full ? 2 * s > r : (s > r || static_cast<int>(s) > dcap))
            break;
        if (!try_size(s))
            ++s;
    }
    if (full && current.size() > 1)
        out.push_back(current);
    return out;
}

/* Integer monic model of a monic rational squarefree g:
 * G(y) = D^n g(y / D). */
ZPoly integer_model(PolyQ const& g, Integer& scale)
{
    scale = g.denominator();
    int n = g.degree();
    ZPoly G(n + 1);
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
        Rational v = g.coeff(i) * Rational(pw);
        v.canonicalize();
        G[i] = v.get_num();
        pw *= scale;
    }
    return G;
}

PolyQ from_integer_model(ZPoly const& h, Integer const& scale)
{
    // h(D x) / D^deg
    int d = static_cast<int>(h.size()) - 1;
    std::vector<Rational> c(d + 1);
    for (int i = 0; i <= d; ++i) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), scale.get_mpz_t(), d - i);
        c[i] = Rational(h[i], pw);
        c[i].canonicalize();
    }
    return PolyQ(std::move(c));
}

/* Factors of a monic squarefree rational polynomial (degree >= 1). */
std::vector<PolyQ> factor_squarefree(PolyQ const& g, int max_degree)
{
    std::vector<PolyQ> out;
    PolyQ rest = g;
    if (rest.coeff(0) == 0) {
        out.push_back(PolyQ::x());
        rest = exact_quotient(rest, PolyQ::x());
    }
    if (rest.degree() >= 1) {
        Integer scale;
        ZPoly G = integer_model(rest, scale);
        for (auto const& h : zassenhaus(G, max_degree))
            out.push_back(from_integer_model(h, scale));
    }
    if (max_degree >= 0)
        std::erase_if(out, [&](PolyQ const& p) { return p.degree() > max_degree; });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PolyQ PolyFactorization::product() const
{
    PolyQ p(leading);
    for (auto const& [f, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            p *= f;
    return p;
}

std::vector<int> PolyFactorization::degrees() const
{
    std::vector<int> d;
    for (auto const& [f, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            d.push_back(f.degree());
    return d;
}

bool is_squarefree(PolyQ const& f)
{
    if (f.degree() < 1)
        return true;
    PolyQ fm = f.monic();
    Integer scale;
    ZPoly G = integer_model(fm, scale);
    int tried = 0;
    for (unsigned long l : small_primes_up_to(2000)) {
        if (l == 2)
            continue;
        Fp fp(l);
        FpPoly gp;
        if (squarefree_mod(G, fp, gp))
            return true;
        if (++tried > 40)
            break;
    }
    return gcd(fm, fm.derivative()).degree() == 0;
}

PolyFactorization factor_poly_q(PolyQ const& f)
{
    if (f.is_zero())
        throw ArithmeticError("factor_poly_q: zero polynomial");
    PolyFactorization res;
    res.leading = f.leading();
    if (f.degree() == 0)
        return res;
    PolyQ fm = f.monic();
    std::vector<std::pair<PolyQ, unsigned>> parts;
    if (is_squarefree(fm))
        parts.emplace_back(fm, 1);
    else
        parts = squarefree_decomposition(fm);
    for (auto const& [a, e] : parts)
        for (auto& p : factor_squarefree(a, -1))
            res.factors.emplace_back(std::move(p), e);
    std::sort(res.factors.begin(), res.factors.end());
    return res;
}

std::vector<PolyQ> small_degree_factors(PolyQ const& f, int max_degree)
{
    if (f.is_zero())
        throw ArithmeticError("small_degree_factors: zero polynomial");
    if (f.degree() < 1 || max_degree < 1)
        return {};
    PolyQ g = is_squarefree(f) ? f.monic() : squarefree_part(f);
    return factor_squarefree(g, max_degree);
}

std::vector<Rational> rational_roots(PolyQ const& f)
{
    std::vector<Rational> roots;
    for (auto const& h : small_degree_factors(f, 1))
        roots.push_back(-h.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_irreducible(PolyQ const& f)
{
    if (f.degree() < 1)
        return false;
    auto fac = factor_poly_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace mordell
