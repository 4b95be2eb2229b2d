#ifndef MORDELL_TORSION_HPP
#define MORDELL_TORSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mordell/elliptic.hpp"

namespace mordell {

/* C_m + C_n with m | n; the trivial group is (1, 1). */
struct TorsionGroup {
    unsigned long m = 1, n = 1;

    unsigned long order() const { return m * n; }
    /* "C1", "C6", "C2xC6" */
    std::string name() const;
    auto operator<=>(TorsionGroup const&) const = default;
};

TorsionGroup parse_torsion_group(std::string const& name);

/* Search results for one prime power q^k. */
struct LevelEvidence {
    unsigned long order = 0;          // q^k
    int polynomial_degree = 0;        // degree of the primitive division polynomial
    std::vector<NFElement> x_roots;   // its roots in K
    std::vector<bool> liftable;       // y-coordinate found in K, per root
    std::vector<CurvePoint> points;   // exact-order points
};

/* Reduction at one prime of K: #E~(F_{p^f}). */
struct ReductionCount {
    unsigned long p = 0;
    int residue_degree = 0;
    Integer points;
};

struct PrimeEvidence {
    unsigned long prime = 0;
    std::vector<LevelEvidence> levels;
    /* Largest k allowed by the reduction counts (when computed). */
    std::optional<unsigned> reduction_exponent;
    std::string stop_reason;
    unsigned cyclic_exponent = 0;  // b: q-part is C_{q^a} + C_{q^b}
    unsigned full_exponent = 0;    // a
    bool weil_checked = false;     // mu_{q^a} in K confirmed when a > 0
};

struct TorsionReport {
    TorsionGroup group;
    std::vector<CurvePoint> generators;  // orders n then m (when > 1)
    std::vector<unsigned long> primes;
    std::vector<PrimeEvidence> evidence;
    std::vector<ReductionCount> reductions;
};

struct TorsionOptions {
    std::optional<std::vector<unsigned long>> primes;
    unsigned workers = 1;
    bool use_reduction_bound = true;
};

/* All points of exact order k with coordinates in the curve's field. */
std::vector<CurvePoint> torsion_points_of_exact_order(MordellCurve const& e, unsigned long k);

std::vector<unsigned long> candidate_prime_set(FieldPtr const& field,
                                               std::optional<std::vector<unsigned long>> const&
                                                   overrides = std::nullopt);

/* Point counts of the reduction at a few primes of good reduction; empty
 * unless c is rational. */
std::vector<ReductionCount> reduction_counts(MordellCurve const& e, int how_many = 6);

TorsionReport compute_torsion(MordellCurve const& e, FieldPtr const& field,
                              TorsionOptions const& options = {});

/* Lutz-Nagell search over Q for an integral c. */
TorsionGroup rational_torsion_oracle(MordellCurve const& e);

}  // namespace mordell

#endif
