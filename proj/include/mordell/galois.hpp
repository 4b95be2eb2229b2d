#ifndef MORDELL_GALOIS_HPP
#define MORDELL_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

class IncompatibleNameForPrime : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* [[a, b], [c, d]] over F_p. */
struct GL2Matrix {
    uint32_t a = 1, b = 0, c = 0, d = 1;

    auto operator<=>(GL2Matrix const&) const = default;
};

GL2Matrix mat_mul(GL2Matrix const& x, GL2Matrix const& y, uint32_t p);
uint32_t mat_det(GL2Matrix const& x, uint32_t p);

/* -1 (as p - 1) when p = 3 mod 4, else the least quadratic non-residue >= 2. */
uint32_t epsilon_for(uint32_t p);

class GaloisSubgroup {
  public:
    GaloisSubgroup(uint32_t p, std::string name, std::optional<uint32_t> epsilon,
                   std::vector<GL2Matrix> elements, std::vector<GL2Matrix> generators);

    uint32_t p() const { return p_; }
    std::string const& name() const { return name_; }
    std::optional<uint32_t> epsilon() const { return epsilon_; }
    std::vector<GL2Matrix> const& elements() const { return elements_; }
    std::vector<GL2Matrix> const& generators() const { return generators_; }
    unsigned long order() const { return elements_.size(); }
    bool contains(GL2Matrix const& m) const;

  private:
    uint32_t p_;
    std::string name_;
    std::optional<uint32_t> epsilon_;
    std::vector<GL2Matrix> elements_;  // sorted
    std::vector<GL2Matrix> generators_;
};

/* GL2, B, Cs, Cs+, Cns, Cns+, G3, 3Cs.1.1, 3B.1.1, 3B.1.2, B(3), Cs(3). */
std::vector<std::string> const& subgroup_names();

/* The explicit set, certified closed under multiplication; throws
 * IncompatibleNameForPrime when the name does not apply to p. */
GaloisSubgroup build_named_subgroup(std::string const& name, uint32_t p);

/* Order predicted by the defining formula. */
unsigned long closed_form_order(std::string const& name, uint32_t p);

struct DegreeSet {
    std::vector<unsigned long> orbit_sizes;  // one entry per orbit, sorted
    std::set<unsigned long> degrees;
    unsigned long group_order = 0;
};

/* Orbits of G on the nonzero vectors of F_p^2. */
DegreeSet orbit_degree_set(GaloisSubgroup const& g);

/* Degrees of an order-p point stated for each image (Cns+, Cs+, G3); values
 * may be non-integral. */
std::vector<Rational> stated_point_degrees(std::string const& name, uint32_t p);

struct LemmaComparison {
    std::string name;
    uint32_t p = 0;
    unsigned long group_order = 0;
    std::vector<std::pair<Rational, bool>> stated;          // value, realized
    std::vector<std::pair<unsigned long, bool>> computed;   // orbit size, stated
    bool fully_realized() const;
    bool exact_match() const;
};

LemmaComparison verify_lemma_degrees(std::string const& name, uint32_t p);

}  // namespace mordell

#endif
