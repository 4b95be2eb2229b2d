#ifndef MORDELL_TESTS_ORACLES_HPP
#define MORDELL_TESTS_ORACLES_HPP

// Independent reference computations used to freeze expected values.
// Nothing here calls into the code paths the tests check.

#include <vector>

#include "mordell/poly_q.hpp"

namespace oracle {

using mordell::Integer;
using mordell::PolyQ;
using mordell::PrimePower;
using mordell::Rational;

inline std::vector<PrimePower> trial_division(long n)
{
    std::vector<PrimePower> out;
    if (n < 0)
        n = -n;
    for (long p = 2; p * p <= n; ++p) {
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.push_back({Integer(p), e});
    }
    if (n > 1)
        out.push_back({Integer(n), 1});
    return out;
}

inline Rational determinant(std::vector<std::vector<Rational>> m)
{
    size_t n = m.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Rational f = m[r][col] / m[col][col];
            if (f == 0)
                continue;
            for (size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/* Determinant of the Sylvester matrix. */
inline Rational sylvester_resultant(PolyQ const& f, PolyQ const& g)
{
    int m = f.degree(), n = g.degree();
    size_t size = m + n;
    if (size == 0)
        return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[n + r][r + i] = g.coeff(n - i);
    return determinant(s);
}

/* Coefficients of prod (x - r) by direct expansion. */
inline PolyQ from_roots(std::vector<Rational> const& roots)
{
    std::vector<Rational> c{1};
    for (auto const& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return PolyQ(c);
}

/* Matrix of multiplication by a (residue) on the power basis of Q[t]/(f). */
inline std::vector<std::vector<Rational>> multiplication_matrix(PolyQ const& f, PolyQ const& a)
{
    int n = f.degree();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    // column j holds the coordinates of a * t^j (a already reduced)
    std::vector<Rational> cur(n);
    for (int i = 0; i < n; ++i)
        cur[i] = a.coeff(i);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            m[i][j] = cur[i];
        // multiply by t: shift up and fold t^n = -(f_0 + ... + f_{n-1} t^{n-1}) / f_n
        Rational top = cur[n - 1];
        for (int i = n - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < n; ++i)
            cur[i] -= top * f.coeff(i) / f.coeff(n);
    }
    return m;
}

/* det(x I - M_a) at a rational point x. */
inline Rational charpoly_at(PolyQ const& f, PolyQ const& a, Rational const& x)
{
    auto m = multiplication_matrix(f, a);
    for (size_t i = 0; i < m.size(); ++i) {
        for (auto& v : m[i])
            v = -v;
        m[i][i] += x;
    }
    return determinant(m);
}

}  // namespace oracle

#endif
