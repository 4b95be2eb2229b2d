#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mordell/factor.hpp"
#include "mordell/report.hpp"

using namespace mordell;

namespace {

/* Usage problems that CLI11 cannot see, such as malformed input files. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_cap(unsigned requested)
{
    unsigned cap = requested;
    if (char const* env = std::getenv("MORDELL_THREADS")) {
        try {
            unsigned long v = std::stoul(env);
            if (v >= 1)
                cap = std::min<unsigned>(cap, static_cast<unsigned>(v));
        } catch (std::exception const&) {
            throw UsageError("MORDELL_THREADS must be a positive integer");
        }
    }
    return std::max(1u, cap);
}

json read_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::exception const& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_json_file(std::string const& path, json const& j)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::vector<unsigned long> parse_list(std::string const& s)
{
    std::vector<unsigned long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoul(item));
    return out;
}

struct TorsionArgs {
    std::string curve_file, field_file, c, primes, out;
    unsigned workers = 1;
};

int run_torsion(TorsionArgs const& a, bool as_json)
{
    MordellCurve e = [&] {
        if (!a.curve_file.empty())
            return curve_from_json(read_json_file(a.curve_file));
        if (a.c.empty())
            throw UsageError("torsion needs --curve or --c");
        return MordellCurve(rationals(), parse_rational(a.c));
    }();
    FieldPtr K = a.field_file.empty() ? e.field() : field_from_json(read_json_file(a.field_file));
    TorsionOptions opt;
    opt.workers = thread_cap(a.workers);
    if (!a.primes.empty())
        opt.primes = parse_list(a.primes);
    auto report = compute_torsion(e, K, opt);
    auto j = torsion_report_to_json(report);
    if (!a.out.empty())
        write_json_file(a.out, j);
    if (as_json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "field: " << (K->label().empty() ? "K" : K->label()) << "\n";
        std::cout << "torsion: " << report.group.name() << "\n";
        for (auto const& g : report.generators)
            std::cout << "generator: " << to_string(g) << "\n";
        for (auto const& ev : report.evidence)
            std::cout << "prime " << ev.prime << ": exponent " << ev.full_exponent << "/" << ev.cyclic_exponent
                      << ", " << ev.stop_reason << "\n";
    }
    return 0;
}

struct ClassifyArgs {
    std::string shape = "2p", trace;
    unsigned long p = 5;
};

int run_classify(ClassifyArgs const& a, bool as_json)
{
    auto c = classify(make_degree_form(a.shape, a.p));
    auto j = classification_to_json(c);
    if (!a.trace.empty())
        write_json_file(a.trace, j);
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "degree " << c.form.degree() << " (" << a.shape << ", p = " << a.p << ")\n";
    std::cout << "groups:";
    for (auto const& g : c.groups)
        std::cout << ' ' << g.name();
    std::cout << "\n";
    for (auto const& t : c.traces) {
        std::cout << "  " << t.candidate.name() << ": " << to_string(t.verdict);
        if (t.verdict == Verdict::Excluded)
            std::cout << " by " << to_string(t.rule);
        std::cout << " [" << t.anchor << "]";
        if (t.witness)
            std::cout << " " << t.witness->curve << " over " << t.witness->field;
        std::cout << "\n";
    }
    return 0;
}

struct GaloisArgs {
    std::string group;
    unsigned long p = 0;
    bool orbits = false, lemma = false;
};

int run_galois(GaloisArgs const& a, bool as_json)
{
    auto g = build_named_subgroup(a.group, static_cast<uint32_t>(a.p));
    json j{{"group", g.name()}, {"p", g.p()}, {"order", g.order()}, {"closed_form_order", closed_form_order(a.group, g.p())}};
    if (a.orbits)
        j = degree_set_to_json(g, orbit_degree_set(g));
    if (a.lemma)
        j["lemma"] = lemma_comparison_to_json(verify_lemma_degrees(a.group, g.p()));
    if (as_json || a.orbits) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << g.name() << "(" << g.p() << "): order " << g.order() << "\n";
    if (a.lemma)
        std::cout << "lemma degrees match: " << (j["lemma"]["exact_match"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
}

struct DivpolyArgs {
    std::string c;
    unsigned long n = 0;
    bool primitive = false, factor = false, squared = false;
};

int run_divpoly(DivpolyArgs const& a, bool as_json)
{
    if (a.n < 1)
        throw UsageError("--n must be at least 1");
    DivisionPolynomials dp(MordellCurve(rationals(), parse_rational(a.c)));
    PolyQ f = a.primitive ? dp.primitive_rational(a.n)
                          : dp.get_rational(a.n, a.squared ? DivisionConvention::Squared : DivisionConvention::Stripped);
    json j{{"c", a.c}, {"n", a.n}, {"primitive", a.primitive}, {"degree", f.degree()}, {"polynomial", poly_to_json(f)}};
    PolyFactorization fac;
    if (a.factor) {
        fac = factor_poly_q(f);
        json fs = json::array();
        for (auto const& [h, e] : fac.factors)
            fs.push_back({{"polynomial", poly_to_json(h)}, {"degree", h.degree()}, {"exponent", e}});
        j["leading"] = to_string(fac.leading);
        j["factors"] = fs;
    }
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << to_string(f) << "\n";
    if (a.factor) {
        std::cout << "leading: " << to_string(fac.leading) << "\n";
        for (auto const& [h, e] : fac.factors)
            std::cout << "factor (degree " << h.degree() << (e > 1 ? ", exponent " + std::to_string(e) : "")
                      << "): " << to_string(h) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string out, only;
    bool timings = false;
};

int run_verify(VerifyArgs const& a, bool as_json)
{
    VerifyOptions opt;
    opt.workers = std::getenv("MORDELL_THREADS") ? thread_cap(64) : 1;
    opt.timings = a.timings;
    opt.only = a.only;
    auto report = verify_paper(opt);
    auto j = report_to_json(report);
    if (!a.out.empty())
        write_json_file(a.out, j);
    if (as_json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto const& c : report.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.desc;
            if (a.timings)
                std::cout << "  (" << c.ms << " ms)";
            std::cout << "\n";
            if (!c.pass)
                std::cout << "     expected: " << c.expected << "\n     computed: " << c.computed << "\n";
        }
        std::cout << report.passed() << " passed, " << report.failed() << " failed\n";
    }
    return report.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torsion of Mordell curves y^2 = x^3 + c over number fields"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    TorsionArgs ta;
    auto* torsion = app.add_subcommand("torsion", "Torsion subgroup over a number field");
    torsion->add_option("--curve", ta.curve_file, "Curve JSON file");
    torsion->add_option("--c", ta.c, "Rational c for y^2 = x^3 + c over Q");
    torsion->add_option("--field", ta.field_file, "Field JSON file (defaults to the curve's field)");
    torsion->add_option("--primes", ta.primes, "Comma-separated primes to search");
    torsion->add_option("--workers", ta.workers, "Per-prime workers (capped by MORDELL_THREADS)");
    torsion->add_option("--out", ta.out, "Write the report JSON here");
    torsion->add_flag("--json", as_json, "Emit JSON");

    ClassifyArgs ca;
    auto* cls = app.add_subcommand("classify", "Possible torsion over fields of degree 2p or 3p");
    cls->add_option("--shape", ca.shape, "2p or 3p")->required();
    cls->add_option("--p", ca.p, "Prime p >= 5")->required();
    cls->add_option("--trace", ca.trace, "Write the trace JSON here");
    cls->add_flag("--json", as_json, "Emit JSON");

    GaloisArgs ga;
    auto* gal = app.add_subcommand("galois", "Named subgroups of GL2(F_p)");
    gal->add_option("--group", ga.group, "Subgroup name")->required();
    gal->add_option("--p", ga.p, "Prime")->required();
    gal->add_flag("--orbits", ga.orbits, "Orbit sizes on nonzero vectors");
    gal->add_flag("--lemma", ga.lemma, "Compare with the stated point degrees");
    gal->add_flag("--json", as_json, "Emit JSON");

    DivpolyArgs da;
    auto* div = app.add_subcommand("divpoly", "Division polynomials of y^2 = x^3 + c over Q");
    div->add_option("--c", da.c, "Rational c")->required();
    div->add_option("--n", da.n, "Index n")->required();
    div->add_flag("--primitive", da.primitive, "Exact-order-n part, monic");
    div->add_flag("--squared", da.squared, "psi_n^2 for even n instead of psi_n / 2y");
    div->add_flag("--factor", da.factor, "Factor over Q");
    div->add_flag("--json", as_json, "Emit JSON");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify-paper", "Run the acceptance suite");
    ver->add_option("--out", va.out, "Write the report JSON here");
    ver->add_option("--only", va.only, "Only checks whose id starts with this prefix");
    ver->add_flag("--timings", va.timings, "Record elapsed milliseconds");
    ver->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*torsion)
            return run_torsion(ta, as_json);
        if (*cls)
            return run_classify(ca, as_json);
        if (*gal)
            return run_galois(ga, as_json);
        if (*div)
            return run_divpoly(da, as_json);
        if (*ver)
            return run_verify(va, as_json);
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
