#include "mordell/poly_q.hpp"

#include <algorithm>
#include <sstream>

namespace mordell {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : PolyQ(std::vector<Rational>(coeffs)) {}

PolyQ::PolyQ(Rational const& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

PolyQ PolyQ::monomial(Rational const& coeff, int degree)
{
    if (coeff == 0)
        return {};
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return PolyQ(std::move(c));
}

void PolyQ::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[i];
}

Rational const& PolyQ::leading() const
{
    if (is_zero())
        throw ArithmeticError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational PolyQ::operator()(Rational const& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

PolyQ PolyQ::derivative() const
{
    if (degree() < 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const
{
    if (is_zero())
        return {};
    PolyQ r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_)
        c *= inv;
    return r;
}

PolyQ PolyQ::shifted(Rational const& shift) const
{
    // Horner in the shifted variable
    PolyQ acc;
    PolyQ lin{shift, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + PolyQ(*it);
    return acc;
}

PolyQ PolyQ::scaled(Rational const& s) const
{
    std::vector<Rational> c(coeffs_);
    Rational pw = 1;
    for (auto& v : c) {
        v *= pw;
        pw *= s;
    }
    return PolyQ(std::move(c));
}

bool PolyQ::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](Rational const& c) { return c.get_den() == 1; });
}

Integer PolyQ::denominator() const
{
    Integer d = 1;
    for (auto const& c : coeffs_)
        d = lcm(d, c.get_den());
    return d;
}

PolyQ& PolyQ::operator+=(PolyQ const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(PolyQ const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(Rational const& s)
{
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

PolyQ& PolyQ::operator*=(PolyQ const& o)
{
    *this = *this * o;
    return *this;
}

PolyQ operator*(PolyQ const& a, PolyQ const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    // Multiply the integer numerators, divide once at the end.
    Integer da = a.denominator(), db = b.denominator();
    std::vector<Integer> ia(a.coeffs_.size()), ib(b.coeffs_.size());
    for (size_t i = 0; i < ia.size(); ++i)
        ia[i] = a.coeffs_[i].get_num() * (da / a.coeffs_[i].get_den());
    for (size_t i = 0; i < ib.size(); ++i)
        ib[i] = b.coeffs_[i].get_num() * (db / b.coeffs_[i].get_den());
    std::vector<Integer> prod(ia.size() + ib.size() - 1);
    for (size_t i = 0; i < ia.size(); ++i) {
        if (ia[i] == 0)
            continue;
        for (size_t j = 0; j < ib.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
    Integer den = da * db;
    std::vector<Rational> out(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) {
        out[i] = Rational(prod[i], den);
    }
    return PolyQ(std::move(out));
}

PolyQ operator-(PolyQ a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

std::pair<PolyQ, PolyQ> divmod(PolyQ const& a, PolyQ const& b)
{
    if (b.is_zero())
        throw ArithmeticError("polynomial division by zero");
    int db = b.degree();
    if (a.degree() < db)
        return {PolyQ{}, a};
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> q(a.degree() - db + 1);
    Rational inv = 1 / b.leading();
    auto bc = b.coeffs();
    for (int i = a.degree() - db; i >= 0; --i) {
        Rational f = r[i + db] * inv;
        q[i] = f;
        if (f == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= f * bc[j];
    }
    r.resize(db);
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ operator/(PolyQ const& a, PolyQ const& b)
{
    return divmod(a, b).first;
}

PolyQ operator%(PolyQ const& a, PolyQ const& b)
{
    return divmod(a, b).second;
}

std::strong_ordering PolyQ::operator<=>(PolyQ const& o) const
{
    if (auto c = degree() <=> o.degree(); c != 0)
        return c;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int s = cmp(coeffs_[i], o.coeffs_[i]);
        if (s != 0)
            return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

PolyQ gcd(PolyQ const& f, PolyQ const& g)
{
    if (f.is_zero() && g.is_zero())
        throw ArithmeticError("gcd of two zero polynomials");
    PolyQ a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        PolyQ r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd xgcd(PolyQ const& f, PolyQ const& g)
{
    if (f.is_zero() && g.is_zero())
        throw ArithmeticError("xgcd of two zero polynomials");
    PolyQ r0 = f, r1 = g;
    PolyQ s0(Rational(1)), s1, t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyQ s2 = s0 - q * s1;
        PolyQ t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Rational resultant(PolyQ const& f, PolyQ const& g)
{
    if (f.is_zero() || g.is_zero())
        throw ArithmeticError("resultant with a zero polynomial");
    PolyQ a = f, b = g;
    Rational acc = 1;
    while (true) {
        int m = a.degree(), n = b.degree();
        if (n == 0) {
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), b.leading().get_num_mpz_t(), m);
            mpz_pow_ui(p.get_den_mpz_t(), b.leading().get_den_mpz_t(), m);
            p.canonicalize();
            return acc * p;
        }
        PolyQ r = a % b;
        if (r.is_zero())
            return 0;
        // res(a,b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
        if ((m % 2 == 1) && (n % 2 == 1))
            acc = -acc;
        Rational p;
        unsigned long e = m - r.degree();
        mpz_pow_ui(p.get_num_mpz_t(), b.leading().get_num_mpz_t(), e);
        mpz_pow_ui(p.get_den_mpz_t(), b.leading().get_den_mpz_t(), e);
        p.canonicalize();
        acc *= p;
        a = std::move(b);
        b = std::move(r);
    }
}

PolyQ compose(PolyQ const& f, PolyQ const& g)
{
    PolyQ acc;
    auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * g + PolyQ(*it);
    return acc;
}

PolyQ squarefree_part(PolyQ const& f)
{
    if (f.degree() < 1)
        return f.is_zero() ? f : PolyQ(Rational(1));
    return exact_quotient(f.monic(), gcd(f, f.derivative()));
}

std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(PolyQ const& f)
{
    std::vector<std::pair<PolyQ, unsigned>> out;
    if (f.degree() < 1)
        return out;
    PolyQ fm = f.monic();
    PolyQ a = gcd(fm, fm.derivative());
    PolyQ b = exact_quotient(fm, a);
    PolyQ c = exact_quotient(fm.derivative(), a);
    PolyQ d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        PolyQ a_i = gcd(b, d);
        b = exact_quotient(b, a_i);
        c = exact_quotient(d, a_i);
        d = c - b.derivative();
        if (a_i.degree() > 0)
            out.emplace_back(a_i, i);
        ++i;
    }
    return out;
}

PolyQ exact_quotient(PolyQ const& a, PolyQ const& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw ArithmeticError("exact_quotient: division leaves a remainder");
    return q;
}

std::string to_string(PolyQ const& p, std::string const& var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rational a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1)
            os << to_string(a) << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::vector<std::string> to_coefficient_strings(PolyQ const& p)
{
    std::vector<std::string> out;
    for (auto const& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

PolyQ from_coefficient_strings(std::vector<std::string> const& coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (auto const& s : coeffs)
        c.push_back(parse_rational(s));
    return PolyQ(std::move(c));
}

}  // namespace mordell
