#ifndef MORDELL_CLASSIFIER_HPP
#define MORDELL_CLASSIFIER_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mordell/torsion.hpp"

namespace mordell {

class InvalidDegreeForm : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class UnknownCandidate : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* An admitted group without a working witness, or a witness that disagrees. */
class InconsistentRuleSet : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

enum class Shape { TwoP, ThreeP };

/* [K:Q] = 2p or 3p with p >= 5 prime. */
struct DegreeForm {
    Shape shape = Shape::TwoP;
    unsigned long p = 5;

    unsigned long degree() const { return (shape == Shape::TwoP ? 2 : 3) * p; }
    std::string shape_name() const { return shape == Shape::TwoP ? "2p" : "3p"; }
};

DegreeForm make_degree_form(std::string const& shape, unsigned long p);

/* ---- cited data ---------------------------------------------------------- */

struct CitedFact {
    std::string id;
    std::string citation;
    std::string value_json;
};

/* Parsed once from the embedded data file. */
std::vector<CitedFact> const& cited_facts();
CitedFact const& cited_fact(std::string const& id);

/* Degrees of an order-q point for one possible image. */
struct ImageDegrees {
    std::string image;
    std::vector<Rational> stated;               // from the data file; may be non-integral
    std::optional<std::set<unsigned long>> computed;  // orbit sizes when the group is explicit
    /* Integral stated values together with the computed ones. */
    std::set<unsigned long> admissible() const;
};

struct ImageFact {
    unsigned long q = 0;
    std::vector<ImageDegrees> images;
    std::string citation_id;
    std::vector<std::string> divergences;  // stated vs computed, one line each
    std::set<unsigned long> admissible() const;
};

/* Images and point degrees for a prime q; cached. */
ImageFact const& image_fact(unsigned long q);

/* ---- traces -------------------------------------------------------------- */

enum class Verdict { Excluded, Admitted, Realized };
enum class Rule { None, Divisibility, Weil, ImageDegree, PrimePowerClimb, CitedExternal, ContainsExcluded };

std::string to_string(Verdict v);
std::string to_string(Rule r);

struct Witness {
    std::string curve;  // e.g. "y^2 = x^3 + 16"
    std::string field;  // label of the base field
    std::vector<long> a_invariants;        // a1 a2 a3 a4 a6
    std::vector<long> field_polynomial;    // low degree first
    unsigned long field_degree = 1;
    TorsionGroup computed;
};

struct ExclusionTrace {
    TorsionGroup candidate;
    Verdict verdict = Verdict::Admitted;
    Rule rule = Rule::None;
    std::string anchor;
    std::string obstruction;               // prime exclusions: divisible-by-4, even, no-degree-divides-d
    std::vector<std::string> details;
    std::vector<std::string> citations;    // cited fact ids used
    std::vector<std::string> divergences;  // flagged stated/computed mismatches
    std::optional<Witness> witness;
};

struct PrimeSets {
    std::vector<unsigned long> candidates;  // cited set
    std::vector<unsigned long> mordell;     // after per-prime exclusion
};

PrimeSets torsion_prime_set(DegreeForm const& form);

/* C_q for a prime q from the candidate set. */
ExclusionTrace exclude_prime(unsigned long q, DegreeForm const& form);

/* C4, C9, C18 or C27; throws UnknownCandidate otherwise. */
ExclusionTrace exclude_prime_power(TorsionGroup const& group, DegreeForm const& form);

/* Full m-torsion C_m x C_m for m >= 2. */
ExclusionTrace exclude_full_torsion(unsigned long m, DegreeForm const& form);

struct Classification {
    DegreeForm form;
    std::set<TorsionGroup> groups;
    std::vector<ExclusionTrace> traces;
};

/* Runs every rule over the candidate lattice; admitted groups get a witness
 * verified by compute_torsion. */
Classification classify(DegreeForm const& form);

/* Witness for a group in the given shape, verified and cached; nullopt when
 * none is on file. */
std::optional<Witness> realize(TorsionGroup const& group, DegreeForm const& form);

/* The encoded degree-2 (for 2p) or degree-3 (for 3p) classification. */
std::set<TorsionGroup> base_degree_set(DegreeForm const& form);

}  // namespace mordell

#endif
