#include "fp_poly.hpp"

namespace mordell::detail {

uint64_t Fp::inv(uint64_t a) const
{
    // Fermat
    uint64_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint64_t Fp::reduce(Integer const& z) const
{
    return mpz_fdiv_ui(z.get_mpz_t(), p_);
}

void Fp::trim(FpPoly& a) const
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

FpPoly Fp::add(FpPoly const& a, FpPoly const& b) const
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

FpPoly Fp::sub(FpPoly const& a, FpPoly const& b) const
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

FpPoly Fp::mul(FpPoly const& a, FpPoly const& b) const
{
    if (a.empty() || b.empty())
        return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> Fp::divmod(FpPoly const& a, FpPoly const& b) const
{
    if (a.size() < b.size())
        return {{}, a};
    FpPoly r = a;
    size_t db = b.size() - 1;
    FpPoly q(a.size() - db, 0);
    uint64_t il = inv(b.back());
    for (size_t i = q.size(); i-- > 0;) {
        uint64_t f = mul(r[i + db], il);
        q[i] = f;
        if (f == 0)
            continue;
        for (size_t j = 0; j <= db; ++j)
            r[i + j] = sub(r[i + j], mul(f, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

FpPoly Fp::monic(FpPoly const& a) const
{
    if (a.empty())
        return a;
    FpPoly r = a;
    uint64_t il = inv(a.back());
    for (auto& c : r)
        c = mul(c, il);
    return r;
}

FpPoly Fp::gcd(FpPoly a, FpPoly b) const
{
    while (!b.empty()) {
        FpPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

void Fp::xgcd(FpPoly const& a, FpPoly const& b, FpPoly& g, FpPoly& s, FpPoly& t) const
{
    FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = sub(s0, mul(q, s1));
        FpPoly t2 = sub(t0, mul(q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    uint64_t il = inv(r0.back());
    for (auto* v : {&r0, &s0, &t0})
        for (auto& c : *v)
            c = mul(c, il);
    g = r0;
    s = s0;
    t = t0;
}

FpPoly Fp::derivative(FpPoly const& a) const
{
    if (a.size() <= 1)
        return {};
    FpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        d[i - 1] = mul(a[i], i % p_);
    trim(d);
    return d;
}

FpPoly Fp::powmod(FpPoly const& base, Integer const& e, FpPoly const& m) const
{
    FpPoly result{1};
    result = mod(result, m);
    FpPoly b = mod(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = mod(mul(result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mod(mul(result, b), m);
    }
    return result;
}

FpPoly Fp::from(std::vector<Integer> const& z) const
{
    FpPoly r(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        r[i] = reduce(z[i]);
    trim(r);
    return r;
}

std::vector<std::pair<int, FpPoly>> Fp::distinct_degree(FpPoly f, int max_degree,
                                                        FpPoly& leftover) const
{
    std::vector<std::pair<int, FpPoly>> out;
    FpPoly x{0, 1};
    FpPoly h = mod(x, f);
    Integer pz = static_cast<unsigned long>(p_);
    for (int d = 1; d <= max_degree && static_cast<int>(f.size()) - 1 >= 2 * d; ++d) {
        h = powmod(h, pz, f);
        FpPoly g = gcd(sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(d, g);
            f = divmod(f, g).first;
            h = mod(h, f);
        }
    }
    int rest = static_cast<int>(f.size()) - 1;
    if (rest > 0 && rest <= max_degree) {
        // Everything left is a single irreducible of degree rest.
        out.emplace_back(rest, f);
        f = FpPoly{1};
    }
    leftover = f;
    return out;
}

std::vector<FpPoly> Fp::equal_degree(FpPoly const& f, int d, std::mt19937_64& rng) const
{
    int n = static_cast<int>(f.size()) - 1;
    if (n == d)
        return {f};
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p_, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<uint64_t> dist(0, p_ - 1);
    while (true) {
        FpPoly a(n);
        for (auto& c : a)
            c = dist(rng);
        trim(a);
        if (a.size() < 2)
            continue;
        FpPoly b = sub(powmod(a, e, f), FpPoly{1});
        FpPoly g = gcd(b, f);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < n) {
            auto left = equal_degree(g, d, rng);
            auto right = equal_degree(divmod(f, g).first, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

}  // namespace mordell::detail
