#ifndef MORDELL_FACTOR_HPP
#define MORDELL_FACTOR_HPP

#include <utility>
#include <vector>

#include "mordell/poly_q.hpp"

namespace mordell {

/* f = leading * prod factor^exponent, factors monic irreducible and sorted
 * by the canonical PolyQ order. */
struct PolyFactorization {
    Rational leading;
    std::vector<std::pair<PolyQ, unsigned>> factors;

    PolyQ product() const;
    std::vector<int> degrees() const;
};

/* Zassenhaus: factor modulo a good prime, Hensel lift, recombine. */
PolyFactorization factor_poly_q(PolyQ const& f);

/* The distinct monic irreducible factors of f over Q with degree at most
 * max_degree, sorted. Only local factors of small degree are lifted and
 * recombined, so this stays cheap on large inputs. */
std::vector<PolyQ> small_degree_factors(PolyQ const& f, int max_degree);

std::vector<Rational> rational_roots(PolyQ const& f);

bool is_irreducible(PolyQ const& f);

/* True if f has no repeated factor. Decided modulo a small prime when
 * possible and by a rational gcd otherwise. */
bool is_squarefree(PolyQ const& f);

}  // namespace mordell

#endif
