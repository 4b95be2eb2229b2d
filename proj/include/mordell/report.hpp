#ifndef MORDELL_REPORT_HPP
#define MORDELL_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mordell/classifier.hpp"
#include "mordell/galois.hpp"
#include "mordell/torsion.hpp"

namespace mordell {

using json = nlohmann::json;

/* Coefficient strings, low degree first. */
json poly_to_json(PolyQ const& p);
PolyQ poly_from_json(json const& j);

/* {"defining_polynomial": [...], "label": "..."} */
json field_to_json(FieldPtr const& field);
FieldPtr field_from_json(json const& j);

/* Power-basis coefficient strings; a bare number or string is read as a
 * rational. */
json element_to_json(NFElement const& a);
NFElement element_from_json(FieldPtr const& field, json const& j);

/* {"x": ..., "y": ...} or "infinity" */
json point_to_json(CurvePoint const& p);

/* {"field": ..., "c": ...} or {"field": ..., "long": {"a1": ..., ...}}; the
 * field defaults to Q. */
MordellCurve curve_from_json(json const& j);

json torsion_report_to_json(TorsionReport const& r);
json trace_to_json(ExclusionTrace const& t);
json classification_to_json(Classification const& c);
json degree_set_to_json(GaloisSubgroup const& g, DegreeSet const& d);
json lemma_comparison_to_json(LemmaComparison const& c);

/* "3 * (x) * (x^3 + 108)" */
std::string factorization_text(PolyQ const& f);

struct Check {
    std::string id;
    int criterion = 0;
    std::string desc;
    std::string expected;
    std::string computed;
    bool pass = false;
    long ms = 0;
};

struct VerificationReport {
    std::vector<Check> checks;  // ordered by id
    int passed() const;
    int failed() const;
    /* Per criterion: all of its checks pass. */
    bool criterion_passes(int criterion) const;
};

struct VerifyOptions {
    unsigned workers = 1;
    bool timings = false;
    /* Only checks whose id starts with this prefix. */
    std::string only;
};

VerificationReport verify_paper(VerifyOptions const& options = {});
json report_to_json(VerificationReport const& r);

/* Description of each acceptance criterion, 1-based. */
std::vector<std::string> const& criterion_titles();

}  // namespace mordell

#endif
