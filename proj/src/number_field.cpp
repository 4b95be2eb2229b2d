#include "mordell/number_field.hpp"

#include <algorithm>

#include "mordell/factor.hpp"

namespace mordell {

ReduciblePolynomial::ReduciblePolynomial(PolyQ factor)
    : NumberFieldError("defining polynomial is reducible; factor " + to_string(factor)),
      factor_(std::move(factor))
{
}

NumberField::NumberField(PolyQ defining, std::string label)
    : defining_(std::move(defining)), label_(std::move(label))
{
}

FieldPtr make_number_field(PolyQ const& f, std::string label)
{
    if (f.degree() < 1)
        throw InvalidDefiningPolynomial("defining polynomial must be nonconstant");
    PolyQ g = f.monic();
    auto fac = factor_poly_q(g);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
        throw ReduciblePolynomial(fac.factors.front().first);
    if (label.empty())
        label = g.degree() == 1 ? "Q" : "Q[t]/(" + to_string(g, "t") + ")";
    return std::make_shared<NumberField const>(g, label);
}

FieldPtr rationals()
{
    static FieldPtr const q = std::make_shared<NumberField const>(PolyQ::x(), "Q");
    return q;
}

namespace {

bool same_field(FieldPtr const& a, FieldPtr const& b)
{
    return a == b || (a && b && *a == *b);
}

int compare_key(Rational const& a, Rational const& b)
{
    int c = cmp(abs(a), abs(b));
    if (c != 0)
        return c;
    if (a == b)
        return 0;
    return a > b ? -1 : 1;
}

int compare_residues(PolyQ const& a, PolyQ const& b)
{
    int n = std::max(a.degree(), b.degree());
    for (int i = 0; i <= n; ++i) {
        int c = compare_key(a.coeff(i), b.coeff(i));
        if (c != 0)
            return c;
    }
    return 0;
}

int compare_polys(PolyNF const& a, PolyNF const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        int c = compare_residues(a.residues()[i], b.residues()[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

}  // namespace

/* NFElement */

NFElement::NFElement(FieldPtr field, PolyQ residue) : field_(std::move(field))
{
    residue_ = residue.degree() >= field_->degree() ? residue % field_->defining_polynomial()
                                                    : std::move(residue);
}

NFElement::NFElement(FieldPtr field, Rational const& value)
    : NFElement(std::move(field), PolyQ(value))
{
}

NFElement NFElement::generator(FieldPtr const& field)
{
    return NFElement(field, PolyQ::x());
}

void NFElement::check_same(NFElement const& o) const
{
    if (!same_field(field_, o.field_))
        throw MismatchedFields("elements belong to different number fields");
}

NFElement NFElement::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    auto eg = xgcd(residue_, field_->defining_polynomial());
    return NFElement(field_, eg.s);
}

NFElement& NFElement::operator+=(NFElement const& o)
{
    check_same(o);
    residue_ += o.residue_;
    return *this;
}

NFElement& NFElement::operator-=(NFElement const& o)
{
    check_same(o);
    residue_ -= o.residue_;
    return *this;
}

NFElement& NFElement::operator*=(NFElement const& o)
{
    check_same(o);
    residue_ = residue_ * o.residue_;
    if (residue_.degree() >= field_->degree())
        residue_ = residue_ % field_->defining_polynomial();
    return *this;
}

NFElement& NFElement::operator/=(NFElement const& o)
{
    check_same(o);
    return *this *= o.inverse();
}

NFElement operator-(NFElement a)
{
    a.residue_ = -a.residue_;
    return a;
}

NFElement NFElement::pow(unsigned long e) const
{
    NFElement r(field_, Rational(1)), b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool NFElement::operator==(NFElement const& o) const
{
    return same_field(field_, o.field_) && residue_ == o.residue_;
}

std::strong_ordering NFElement::operator<=>(NFElement const& o) const
{
    int c = compare_residues(residue_, o.residue_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(NFElement const& a, std::string const& var)
{
    return to_string(a.residue(), var);
}

/* PolyNF */

PolyNF::PolyNF(FieldPtr field, std::vector<PolyQ> residues)
    : field_(std::move(field)), coeffs_(std::move(residues))
{
    for (auto& c : coeffs_)
        if (c.degree() >= field_->degree())
            c = c % field_->defining_polynomial();
    trim();
}

PolyNF::PolyNF(FieldPtr field, std::vector<NFElement> const& coeffs) : field_(std::move(field))
{
    for (auto const& c : coeffs) {
        if (!same_field(c.field(), field_))
            throw MismatchedFields("coefficient from a different field");
        coeffs_.push_back(c.residue());
    }
    trim();
}

PolyNF::PolyNF(FieldPtr field, PolyQ const& rational) : field_(std::move(field))
{
    for (auto const& c : rational.coeffs())
        coeffs_.emplace_back(c);
    trim();
}

void PolyNF::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

NFElement PolyNF::coeff(int i) const
{
    if (i < 0 || i > degree())
        return NFElement(field_, Rational(0));
    return NFElement(field_, coeffs_[i]);
}

NFElement PolyNF::leading() const
{
    if (is_zero())
        throw ArithmeticError("leading coefficient of the zero polynomial");
    return NFElement(field_, coeffs_.back());
}

bool PolyNF::is_rational() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](PolyQ const& c) { return c.degree() <= 0; });
}

PolyQ PolyNF::to_rational() const
{
    std::vector<Rational> c;
    for (auto const& r : coeffs_) {
        if (r.degree() > 0)
            throw ArithmeticError("polynomial has irrational coefficients");
        c.push_back(r.coeff(0));
    }
    return PolyQ(std::move(c));
}

NFElement PolyNF::operator()(NFElement const& at) const
{
    NFElement acc(field_, Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + NFElement(field_, *it);
    return acc;
}

PolyNF PolyNF::derivative() const
{
    std::vector<PolyQ> d;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * Rational(static_cast<unsigned long>(i)));
    return PolyNF(field_, std::move(d));
}

PolyNF PolyNF::monic() const
{
    if (is_zero())
        return *this;
    return leading().inverse() * *this;
}

PolyNF PolyNF::shifted(NFElement const& shift) const
{
    PolyNF lin(field_, std::vector<NFElement>{shift, NFElement(field_, Rational(1))});
    PolyNF acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + PolyNF(field_, std::vector<PolyQ>{*it});
    return acc;
}

PolyNF& PolyNF::operator+=(PolyNF const& o)
{
    if (!field_)
        field_ = o.field_;
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyNF& PolyNF::operator-=(PolyNF const& o)
{
    if (!field_)
        field_ = o.field_;
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyNF operator*(PolyNF const& a, PolyNF const& b)
{
    FieldPtr field = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero())
        return PolyNF(field);
    // Accumulate unreduced products and reduce each coefficient once.
    std::vector<PolyQ> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyNF(field, std::move(out));
}

PolyNF operator*(NFElement const& s, PolyNF const& a)
{
    std::vector<PolyQ> out;
    for (auto const& c : a.coeffs_)
        out.push_back(c * s.residue());
    return PolyNF(a.field_, std::move(out));
}

std::pair<PolyNF, PolyNF> divmod(PolyNF const& a, PolyNF const& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    FieldPtr const& K = b.field();
    int db = b.degree();
    if (a.degree() < db)
        return {PolyNF(K), a};
    std::vector<NFElement> r;
    for (int i = 0; i <= a.degree(); ++i)
        r.push_back(a.coeff(i));
    std::vector<NFElement> q(a.degree() - db + 1, NFElement(K, Rational(0)));
    NFElement inv = b.leading().inverse();
    std::vector<NFElement> bc;
    for (int i = 0; i <= db; ++i)
        bc.push_back(b.coeff(i));
    for (int i = a.degree() - db; i >= 0; --i) {
        NFElement f = r[i + db] * inv;
        q[i] = f;
        if (f.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= f * bc[j];
    }
    r.resize(db);
    return {PolyNF(K, q), PolyNF(K, r)};
}

PolyNF gcd(PolyNF const& a, PolyNF const& b)
{
    PolyNF x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        PolyNF r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string to_string(PolyNF const& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        PolyQ const& c = p.residues()[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string cs = to_string(c, "t");
        bool compound = c.degree() > 0 && (cs.find(' ') != std::string::npos);
        if (i == 0) {
            out += compound ? "(" + cs + ")" : cs;
            continue;
        }
        if (cs != "1")
            out += (compound ? "(" + cs + ")" : cs) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

/* Norm by evaluation at x = 0..N and Newton interpolation. */
PolyQ norm(PolyNF const& g)
{
    if (g.is_zero())
        return {};
    FieldPtr const& K = g.field();
    PolyQ const& f = K->defining_polynomial();
    int n = K->degree();
    if (g.is_rational() && n == 1)
        return g.to_rational();
    int N = n * g.degree();
    std::vector<Rational> xs(N + 1), ys(N + 1);
    for (int j = 0; j <= N; ++j) {
        xs[j] = j;
        PolyQ at;
        Rational pw = 1;
        for (auto const& c : g.residues()) {
            at += c * pw;
            pw *= xs[j];
        }
        ys[j] = at.is_zero() ? Rational(0) : resultant(f, at % f);
    }
    // divided differences in place
    for (int k = 1; k <= N; ++k)
        for (int j = N; j >= k; --j)
            ys[j] = (ys[j] - ys[j - 1]) / (xs[j] - xs[j - k]);
    PolyQ p(ys[N]);
    for (int k = N - 1; k >= 0; --k)
        p = p * PolyQ{-xs[k], Rational(1)} + PolyQ(ys[k]);
    return p;
}

PolyNF NFFactorization::product() const
{
    PolyNF p(leading.field(), std::vector<NFElement>{leading});
    for (auto const& [f, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            p = p * f;
    return p;
}

namespace {

std::vector<std::pair<PolyNF, unsigned>> squarefree_parts(PolyNF const& g)
{
    std::vector<std::pair<PolyNF, unsigned>> out;
    PolyNF gm = g.monic();
    PolyNF a = gcd(gm, gm.derivative());
    if (a.degree() == 0) {
        out.emplace_back(gm, 1);
        return out;
    }
    // Yun
    PolyNF b = divmod(gm, a).first;
    PolyNF c = divmod(gm.derivative(), a).first;
    PolyNF d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        PolyNF ai = gcd(b, d);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
        if (ai.degree() > 0)
            out.emplace_back(ai, i);
        ++i;
    }
    return out;
}

/* Shift a monic squarefree a until its norm is squarefree. Returns the
 * shift s and the norm of a(x - s t). */
std::pair<long, PolyQ> squarefree_norm(PolyNF const& a, PolyNF& shifted)
{
    FieldPtr const& K = a.field();
    NFElement t = NFElement::generator(K);
    for (long k = 0;; ++k) {
        long s = (k % 2 == 0) ? -(k / 2) : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
        shifted = s == 0 ? a : a.shifted(NFElement(K, Rational(-s)) * t);
        PolyQ N = norm(shifted);
        if (is_squarefree(N))
            return {s, N};
        if (k > 200)
            throw ArithmeticError("no squarefree norm found");
    }
}

std::vector<PolyNF> factor_squarefree_nf(PolyNF const& a)
{
    if (a.degree() <= 1)
        return {a};
    FieldPtr const& K = a.field();
    PolyNF as;
    auto [s, N] = squarefree_norm(a, as);
    auto fac = factor_poly_q(N);
    if (fac.factors.size() == 1)
        return {a};
    NFElement back = NFElement(K, Rational(s)) * NFElement::generator(K);
    std::vector<PolyNF> out;
    for (auto const& [Ni, e] : fac.factors) {
        PolyNF h = gcd(as, PolyNF(K, Ni));
        out.push_back(s == 0 ? h : h.shifted(back).monic());
    }
    return out;
}

/* Roots in K of a monic squarefree polynomial over K. */
std::vector<NFElement> roots_squarefree_nf(PolyNF const& a)
{
    FieldPtr const& K = a.field();
    std::vector<NFElement> roots;
    if (a.degree() < 1)
        return roots;
    if (a.degree() == 1) {
        roots.push_back(-(a.coeff(0) / a.coeff(1)));
        return roots;
    }
    PolyNF as;
    auto [s, N] = squarefree_norm(a, as);
    NFElement st = NFElement(K, Rational(s)) * NFElement::generator(K);
    for (auto const& Ni : small_degree_factors(N, K->degree())) {
        if (Ni.degree() != K->degree())
            continue;
        PolyNF h = gcd(as, PolyNF(K, Ni));
        if (h.degree() != 1)
            continue;
        roots.push_back(-h.coeff(0) - st);
    }
    return roots;
}

void sort_unique(std::vector<NFElement>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

NFFactorization factor_poly_nf(PolyNF const& g)
{
    if (g.is_zero())
        throw ArithmeticError("factor_poly_nf: zero polynomial");
    NFFactorization res{g.leading(), {}};
    if (g.degree() == 0)
        return res;
    for (auto const& [a, e] : squarefree_parts(g))
        for (auto& h : factor_squarefree_nf(a))
            res.factors.emplace_back(std::move(h), e);
    std::sort(res.factors.begin(), res.factors.end(), [](auto const& x, auto const& y) {
        return compare_polys(x.first, y.first) < 0;
    });
    return res;
}

std::vector<NFElement> roots_in_field(FieldPtr const& field, PolyQ const& g)
{
    if (g.is_zero())
        throw ArithmeticError("roots_in_field: zero polynomial");
    std::vector<NFElement> roots;
    int n = field->degree();
    for (auto const& h : small_degree_factors(g, n)) {
        if (h.degree() == 1) {
            roots.emplace_back(field, -h.coeff(0));
        } else if (n % h.degree() == 0) {
            auto r = roots_squarefree_nf(PolyNF(field, h));
            roots.insert(roots.end(), r.begin(), r.end());
        }
    }
    sort_unique(roots);
    return roots;
}

std::vector<NFElement> roots_in_field(PolyNF const& g)
{
    if (g.is_zero())
        throw ArithmeticError("roots_in_field: zero polynomial");
    if (g.is_rational())
        return roots_in_field(g.field(), g.to_rational());
    PolyNF gm = g.monic();
    PolyNF sf = divmod(gm, gcd(gm, gm.derivative())).first.monic();
    auto roots = roots_squarefree_nf(sf);
    sort_unique(roots);
    return roots;
}

std::optional<NFElement> sqrt_in_field(NFElement const& beta)
{
    FieldPtr const& K = beta.field();
    if (beta.is_zero())
        return beta;
    std::vector<NFElement> roots;
    if (beta.is_rational()) {
        roots = roots_in_field(K, PolyQ{-beta.rational_value(), 0, 1});
    } else {
        PolyNF p(K, std::vector<NFElement>{-beta, NFElement(K, Rational(0)),
                                           NFElement(K, Rational(1))});
        roots = roots_in_field(p);
    }
    if (roots.empty())
        return std::nullopt;
    return roots.front();
}

PolyQ cyclotomic_polynomial(unsigned long m)
{
    if (m == 0)
        throw ArithmeticError("cyclotomic polynomial of index 0");
    PolyQ p = PolyQ::monomial(1, static_cast<int>(m)) - PolyQ(Rational(1));
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0)
            p = exact_quotient(p, cyclotomic_polynomial(d));
    return p;
}

bool contains_primitive_root_of_unity(FieldPtr const& field, unsigned long m)
{
    if (m == 0)
        throw ArithmeticError("root of unity of order 0");
    if (m <= 2)
        return true;
    if (field->degree() % euler_phi(m) != 0)
        return false;
    return !roots_in_field(field, cyclotomic_polynomial(m)).empty();
}

PolyQ characteristic_polynomial(NFElement const& a)
{
    FieldPtr const& K = a.field();
    PolyNF lin(K, std::vector<NFElement>{-a, NFElement(K, Rational(1))});
    return norm(lin);
}

PolyQ minimal_polynomial(NFElement const& a)
{
    return squarefree_part(characteristic_polynomial(a));
}

}  // namespace mordell
