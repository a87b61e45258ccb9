#include "holoweb/cli.hpp"

#include "holoweb/foliation.hpp"
#include "holoweb/projective.hpp"
#include "holoweb/segre.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace holoweb {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// report plumbing

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json certificates = json::array();
    std::vector<std::string> warnings;
};

void certify(Report& r, const std::string& claim, const std::string& witness) {
    r.certificates.push_back(json{{"claim", claim}, {"witness", witness}});
}

void print_tree(std::ostream& out, const std::string& prefix, const json& v) {
    if (v.is_object()) {
        if (v.empty()) out << prefix << ": {}\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            print_tree(out, prefix + "." + it.key(), it.value());
    } else if (v.is_array()) {
        if (v.empty()) out << prefix << ": (none)\n";
        int k = 0;
        for (const auto& e : v) print_tree(out, prefix + "[" + std::to_string(k++) + "]", e);
    } else if (v.is_string()) {
        out << prefix << ": " << v.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << v.dump() << "\n";
    }
}

void emit(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        json doc;
        doc["command"] = r.command;
        doc["inputs"] = r.inputs;
        doc["results"] = r.results;
        doc["certificates"] = r.certificates;
        doc["warnings"] = r.warnings;
        doc["version"] = kVersion;
        out << doc.dump(2) << "\n";
        return;
    }
    out << "command: " << r.command << "\n";
    for (auto it = r.inputs.begin(); it != r.inputs.end(); ++it)
        print_tree(out, "input." + it.key(), it.value());
    for (auto it = r.results.begin(); it != r.results.end(); ++it)
        print_tree(out, "result." + it.key(), it.value());
    for (const auto& c : r.certificates) {
        out << "certificate: " << c.at("claim").get<std::string>() << "\n";
        out << "  witness: " << c.at("witness").get<std::string>() << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

// ---------------------------------------------------------------------------
// input classification and parsing

bool is_differential(const std::string& name) {
    return name.size() >= 2 && name[0] == 'd' &&
           std::isalpha(static_cast<unsigned char>(name[1]));
}

std::set<std::string> scan_identifiers(const std::string& text) {
    std::set<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            std::string name = text.substr(i, j - i);
            if (name != "i") out.insert(name);
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

void split_identifiers(const std::string& text, std::vector<std::string>& diffs,
                       std::vector<std::string>& bases) {
    for (const auto& name : scan_identifiers(text))
        (is_differential(name) ? diffs : bases).push_back(name);
}

// Largest combined exponent of the listed differentials over the terms of f.
int max_diff_degree(const MultiPoly& f, const std::vector<std::string>& diffs) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        for (const auto& d : diffs)
            if (f.vars()[i] == d) idx.push_back(i);
    int best = 0;
    for (const auto& [e, c] : f.terms()) {
        int k = 0;
        for (std::size_t j : idx) k += static_cast<int>(e[j]);
        best = std::max(best, k);
    }
    return best;
}

void expect_vars(const std::vector<std::string>& found, const std::set<std::string>& allowed,
                 const std::string& what) {
    for (const auto& v : found)
        if (!allowed.count(v))
            throw precondition_error(what + " must not use the variable '" + v + "'");
}

struct WebInput {
    SurfaceF s;
    bool was_form = false;
    std::string form_echo; // empty when given as a surface
};

// Webs come in either as symmetric forms in (x, y, dx, dy) or as surface
// polynomials F(x, y, p). Both are validated through make_surface.
WebInput parse_web_input(const std::string& text) {
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    WebInput out;
    if (!diffs.empty()) {
        expect_vars(diffs, {"dx", "dy"}, "a web form");
        expect_vars(bases, {"x", "y"}, "a web form");
        WebForm w = web_from_form_poly(parse_poly(text, {"x", "y", "dx", "dy"}));
        out.s = make_surface(web_to_surface(w).F);
        out.was_form = true;
        out.form_echo = w.str();
    } else {
        expect_vars(bases, {"x", "y", "p"}, "a surface polynomial");
        out.s = make_surface(parse_poly(text, {"x", "y", "p"}));
    }
    return out;
}

struct FormInput {
    PlanarForm form;
    MultiPoly removed; // common coefficient factor divided out; 1 when none
    std::string echo;
};

// A planar 1-form a*dU + b*dV in any two base variables; the pair (U, V) is
// the alphabetical order of the base names. The form is saturated here so
// singular loci and indices read off the reduced representative.
FormInput parse_planar_form(const std::string& text) {
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (diffs.empty())
        throw precondition_error("a planar 1-form needs differentials, e.g. x*dy - y*dx");
    if (diffs.size() == 1) {
        // A single differential is fine (forms like dp); synthesize the partner
        // from the base variables present.
        std::string u = diffs[0].substr(1);
        for (const auto& b : bases)
            if (b != u) {
                diffs.push_back("d" + b);
                break;
            }
        if (diffs.size() == 1)
            throw precondition_error("cannot infer the second chart variable of the 1-form '" +
                                     text + "'; mention both differentials");
    }
    if (diffs.size() != 2)
        throw precondition_error("a planar 1-form lives on a two-dimensional chart; got " +
                                 std::to_string(diffs.size()) + " differentials");
    std::sort(diffs.begin(), diffs.end());
    const std::string u = diffs[0].substr(1), v = diffs[1].substr(1);
    expect_vars(bases, {u, v}, "the 1-form's coefficients");
    MultiPoly f = parse_poly(text, {u, v, diffs[0], diffs[1]});
    if (f.is_zero()) throw precondition_error("the 1-form is identically zero");
    MultiPoly a = f.coeff_of(diffs[0], 1);
    MultiPoly b = f.coeff_of(diffs[1], 1);
    MultiPoly recon = a * MultiPoly::variable(diffs[0]) + b * MultiPoly::variable(diffs[1]);
    if (recon != f || a.uses(diffs[1]) || b.uses(diffs[0]))
        throw precondition_error("expression is not linear in the differentials d" + u + ", d" + v);
    FormInput out;
    out.removed = MultiPoly::constant(GaussianRational(1));
    MultiPoly g = gcd(a, b);
    if (!g.is_constant()) {
        a = divide_exact(a, g);
        b = divide_exact(b, g);
        out.removed = g;
    }
    out.form = PlanarForm{u, v, a, b};
    out.echo = out.form.str();
    return out;
}

std::vector<GaussianRational> parse_point_values(std::string text) {
    // strip one layer of parentheses so "(a, b)" and "a,b" both work
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<GaussianRational> out;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',') {
            std::string piece = trim(text.substr(start, pos - start));
            if (piece.empty()) throw parse_error("empty coordinate in point '" + text + "'", pos);
            out.push_back(parse_gaussian(piece));
            start = pos + 1;
        }
    }
    return out;
}

std::string point_str(const GaussianRational& a, const GaussianRational& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}

std::string read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open input file '" + path + "'");
    std::ostringstream acc;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue; // comment lines
        acc << line << ' ';
    }
    return acc.str();
}

// ---------------------------------------------------------------------------
// shared pipeline pieces

// Exact points of the singular locus when one generator is univariate; the
// leftover polynomial (roots outside Q(i)) is reported instead of guessed.
struct LocusPoints {
    std::vector<std::string> points;
    bool complete = false;
    std::string note;
};

bool univariate_in(const MultiPoly& f, const std::string& var, const std::string& other) {
    return !f.uses(other) && f.degree(var) >= 0 && !f.is_constant();
}

LocusPoints locus_points(const PlanarForm& f, bool empty) {
    LocusPoints out;
    if (empty) {
        out.complete = true;
        return out;
    }
    const std::string &u = f.u, &v = f.v;
    // Pick a univariate generator, solve it, then solve the other on each root.
    const MultiPoly *first = nullptr, *second = nullptr;
    std::string fvar, svar;
    if (univariate_in(f.a, u, v)) {
        first = &f.a;
        second = &f.b;
        fvar = u;
        svar = v;
    } else if (univariate_in(f.a, v, u)) {
        first = &f.a;
        second = &f.b;
        fvar = v;
        svar = u;
    } else if (univariate_in(f.b, u, v)) {
        first = &f.b;
        second = &f.a;
        fvar = u;
        svar = v;
    } else if (univariate_in(f.b, v, u)) {
        first = &f.b;
        second = &f.a;
        fvar = v;
        svar = u;
    } else {
        out.note = "no univariate generator; the locus is given by the coefficient pair";
        return out;
    }
    auto [roots, leftover] = exact_roots(*first, fvar);
    bool all = leftover.is_constant();
    for (const auto& r : roots) {
        MultiPoly slice = second->substitute({{fvar, MultiPoly::constant(r)}});
        if (slice.is_zero())
            continue; // cannot happen on a saturated pair, but stay honest
        if (slice.is_constant()) {
            if (slice.constant_value().is_zero()) continue;
            continue; // no point above this root
        }
        auto [roots2, leftover2] = exact_roots(slice, svar);
        if (!leftover2.is_constant()) all = false;
        for (const auto& s : roots2) {
            GaussianRational uval = (fvar == u) ? r : s;
            GaussianRational vval = (fvar == u) ? s : r;
            out.points.push_back(point_str(uval, vval));
        }
    }
    out.complete = all;
    if (!all) out.note = "further singular points solve " + leftover.str() + " = 0";
    return out;
}

json singular_locus_json(const PlanarForm& rest, const SingularLocus& locus) {
    json j;
    j["generators"] = json::array({locus.a.str(), locus.b.str()});
    j["empty"] = locus.empty;
    LocusPoints pts = locus_points(PlanarForm{rest.u, rest.v, locus.a, locus.b}, locus.empty);
    if (!pts.points.empty()) {
        j["point_vars"] = "(" + rest.u + ", " + rest.v + ")";
        j["points"] = pts.points;
        j["points_complete"] = pts.complete;
    }
    if (!pts.note.empty()) j["note"] = pts.note;
    return j;
}

std::string proj_one_form_str(const ProjOneForm& w) {
    PlanarForm head{"X", "Y", w.A, w.B};
    PlanarForm tail{"Z", "Z", w.C, MultiPoly()};
    std::string s = head.str();
    std::string c = tail.str(); // prints C*dZ
    if (c == "0") return s;
    if (!c.empty() && c[0] == '-') return s + " - " + c.substr(1);
    return s + " + " + c;
}

// ---------------------------------------------------------------------------
// option bundle shared by the subcommands

struct Flags {
    std::string expr;
    std::string input_path;
    bool json_mode = false;
    std::string chart = "z";
    std::string to_chart = "x";
    std::string point;
    std::string form_expr;
    int trials = 5;
    unsigned long seed = 20260814UL;
    std::vector<std::string> factors;
    std::vector<std::string> re_pieces;
    std::vector<std::string> im_pieces;
    std::string run = "all";
    std::string dir;

    std::string expression(const char* what) const {
        if (!expr.empty() && !input_path.empty())
            throw precondition_error(std::string("give ") + what +
                                     " either inline (-e) or as a file (--input), not both");
        if (!expr.empty()) return expr;
        if (!input_path.empty()) return read_input_file(input_path);
        throw precondition_error(std::string("missing ") + what + "; use -e or --input");
    }
};

std::vector<MultiPoly> parse_factors(const std::vector<std::string>& texts) {
    std::vector<MultiPoly> out;
    for (const auto& t : texts) {
        std::vector<std::string> diffs, bases;
        split_identifiers(t, diffs, bases);
        if (!diffs.empty())
            throw precondition_error("component factors are surface polynomials in (x, y, p)");
        expect_vars(bases, {"x", "y", "p"}, "a component factor");
        out.push_back(parse_poly(t, {"x", "y", "p"}));
    }
    return out;
}

json factors_json(const std::vector<MultiPoly>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(f.str());
    return out;
}

// ---------------------------------------------------------------------------
// command handlers

void cmd_normalize(const Flags& fl, Report& r) {
    std::string text = fl.expression("a web");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    WebForm raw;
    if (!diffs.empty()) {
        expect_vars(diffs, {"dx", "dy"}, "a web form");
        expect_vars(bases, {"x", "y"}, "a web form");
        raw = web_from_form_poly(parse_poly(text, {"x", "y", "dx", "dy"}));
    } else {
        expect_vars(bases, {"x", "y", "p"}, "a surface polynomial");
        MultiPoly F = parse_poly(text, {"x", "y", "p"});
        if (F.is_zero()) throw precondition_error("web input is identically zero");
        int d = F.degree("p");
        if (d < 1)
            throw precondition_error("surface polynomial must have positive degree in p");
        raw.x = "x";
        raw.y = "y";
        for (int j = 0; j <= d; ++j)
            raw.coeffs.push_back(F.coeff_of("p", static_cast<unsigned>(j)));
    }
    r.inputs["web"] = raw.str();
    NormalizedWeb nw = normalize_web(raw);
    SurfaceF s = web_to_surface(nw.web);
    r.results["normalized"] = nw.web.str();
    r.results["surface"] = s.F.str();
    r.results["degree"] = nw.web.degree();
    r.results["removed_content"] = nw.removed_content.str();
    r.results["removed_repeated"] = nw.removed_repeated.str();
    for (const auto& w : nw.warnings) r.warnings.push_back(w);

    MultiPoly p = MultiPoly::variable("p");
    MultiPoly raw_surface;
    for (int j = 0; j <= raw.degree(); ++j)
        raw_surface += raw.coeffs[static_cast<std::size_t>(j)] * p.pow(static_cast<unsigned>(j));
    MultiPoly prod = nw.removed_content * nw.removed_repeated * s.F;
    GaussianRational unit = raw_surface.lead_coeff() / prod.lead_coeff();
    certify(r, "input = removed_content * removed_repeated * normalized, times the constant",
            unit.str());
}

void cmd_surface(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    if (in.was_form)
        r.inputs["form"] = in.form_echo;
    else
        r.inputs["surface"] = in.s.F.str();
    WebForm w = surface_to_web(in.s);
    w.x = "x";
    w.y = "y";
    r.results["surface"] = in.s.F.str();
    r.results["form"] = w.str();
    r.results["degree"] = in.s.d;
    json coeffs = json::array();
    for (const auto& c : w.coeffs) coeffs.push_back(c.str());
    r.results["coefficients"] = coeffs;
}

void cmd_discriminant(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    DiscriminantCurve d = discriminant_curve(in.s);
    r.results["caustic"] = d.caustic.str();
    r.results["lc_factor"] = d.lc_factor.str();
    r.results["resultant_raw"] = d.resultant_raw.str();
    certify(r, "the caustic is the squarefree part of Res_p(F, F_p) = " + d.resultant_raw.str(),
            d.caustic.str());
    for (const auto& n : d.notes) r.warnings.push_back(n);
}

void cmd_criminant(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    CriminantResult c = criminant(in.s);
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(g.str());
    r.results["generators"] = gens;
    r.results["empty"] = c.empty;
    if (c.empty) {
        certify(r, "the ideal (F, F_p) contains a unit; the criminant is empty",
                c.generators.back().str());
        return;
    }
    if (!c.solved_var.empty()) {
        r.results["solved"] = c.solved_var;
        r.results["relation"] = c.relation.str();
        r.results["eliminated"] = c.eliminated.str();
        json comps = json::array();
        for (const auto& comp : c.components)
            comps.push_back(json{{"factor", comp.factor.str()}, {"relation", comp.relation.str()}});
        r.results["components"] = comps;
        certify(r, "substituting the " + c.solved_var + "-solution of F_p = 0 into F gives",
                c.eliminated.str());
    } else {
        r.warnings.push_back("F_p is not linear in any coordinate; no triangular presentation");
    }
}

void attach_component_report(Report& r, json& entry, const SurfaceF& comp) {
    DicriticalVerdict v = dicritical(comp);
    entry["chart"] = json{{"solved", v.chart.solved}, {"vars", "(" + v.chart.u + ", " + v.chart.v + ")"}};
    entry["restriction"] = v.restriction.str();
    if (!v.locus.removed_common.is_unit())
        r.warnings.push_back("saturation removed the factor " + v.locus.removed_common.str());
    entry["singular_locus"] = singular_locus_json(v.restriction, v.locus);
    entry["dicritical"] = v.dicritical;
    std::string label = comp.F.str();
    if (v.dicritical) {
        certify(r, "the restriction of dy - p dx to {" + label +
                    " = 0} is regular: saturated coefficients have no common zero",
                v.restriction.str());
    } else {
        json& loc = entry["singular_locus"];
        std::string witness = loc.contains("points") && !loc["points"].empty()
                                  ? loc["points"][0].get<std::string>()
                                  : v.locus.a.str() + " = " + v.locus.b.str() + " = 0";
        certify(r, "the restricted foliation on {" + label + " = 0} is singular at", witness);
    }
    r.warnings.push_back("verdict for {" + label + " = 0} is chart-local (chart solving " +
                         v.chart.solved + ")");
}

void cmd_dicritical(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    std::vector<MultiPoly> factors = parse_factors(fl.factors);
    json entries = json::array();
    bool all = true;
    if (factors.empty()) {
        json e;
        e["component"] = in.s.F.str();
        attach_component_report(r, e, in.s);
        all = e["dicritical"].get<bool>();
        entries.push_back(std::move(e));
    } else {
        r.inputs["factors"] = factors_json(factors);
        verify_factorization(in.s.F, factors);
        for (const auto& f : factors) {
            json e;
            e["component"] = f.str();
            attach_component_report(r, e, make_surface(f));
            all = all && e["dicritical"].get<bool>();
            entries.push_back(std::move(e));
        }
    }
    r.results["components"] = std::move(entries);
    r.results["dicritical"] = all;
}

void cmd_singlocus(const Flags& fl, Report& r) {
    std::string text = fl.expression("a web or a planar 1-form");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    bool planar = false;
    if (!diffs.empty()) {
        // Degree-1 forms are taken at face value as foliations; higher degree
        // means a web whose induced foliation we restrict first.
        std::vector<std::string> vars = bases;
        for (const auto& d : diffs) vars.push_back(d);
        for (const auto& d : diffs) {
            std::string b = d.substr(1);
            if (std::find(vars.begin(), vars.end(), b) == vars.end()) vars.push_back(b);
        }
        planar = max_diff_degree(parse_poly(text, vars), diffs) == 1;
    }
    if (planar) {
        FormInput in = parse_planar_form(text);
        r.inputs["form"] = in.echo;
        if (!in.removed.is_unit())
            r.warnings.push_back("saturation removed the factor " + in.removed.str());
        SingularLocus locus = foliation_singular_locus(in.form);
        r.results["vars"] = "(" + in.form.u + ", " + in.form.v + ")";
        r.results["singular_locus"] = singular_locus_json(in.form, locus);
        certify(r,
                locus.empty ? "the saturated coefficients vanish nowhere simultaneously"
                            : "the singular locus is cut out by the saturated coefficient pair",
                locus.a.str() + ", " + locus.b.str());
        return;
    }
    // web path: restrict per component, then read off the locus
    WebInput in = parse_web_input(text);
    r.inputs["web"] = in.s.F.str();
    std::vector<MultiPoly> factors = parse_factors(fl.factors);
    json entries = json::array();
    if (factors.empty()) {
        json e;
        e["component"] = in.s.F.str();
        attach_component_report(r, e, in.s);
        entries.push_back(std::move(e));
    } else {
        r.inputs["factors"] = factors_json(factors);
        verify_factorization(in.s.F, factors);
        for (const auto& f : factors) {
            json e;
            e["component"] = f.str();
            attach_component_report(r, e, make_surface(f));
            entries.push_back(std::move(e));
        }
    }
    r.results["components"] = std::move(entries);
}

void cmd_criminant_invariance(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    std::vector<InvarianceEntry> entries = criminant_invariance(in.s);
    json comps = json::array();
    bool all = true;
    bool any = false;
    for (const auto& e : entries) {
        json c;
        json gens = json::array();
        for (const auto& g : e.component) gens.push_back(g.str());
        c["component"] = gens;
        if (e.skipped) {
            c["skipped"] = true;
            r.warnings.push_back(e.note);
        } else {
            any = true;
            c["curve"] = e.curve.str();
            c["chart"] = json{{"solved", e.chart_solved},
                              {"vars", "(" + e.chart_u + ", " + e.chart_v + ")"}};
            c["invariant"] = e.invariant;
            all = all && e.invariant;
            if (e.invariant) {
                certify(r, "b*g_" + e.chart_u + " - a*g_" + e.chart_v + " is g times the cofactor, g = " +
                            e.curve.str(),
                        e.witness.str());
            } else {
                certify(r, "b*g_" + e.chart_u + " - a*g_" + e.chart_v +
                            " is not a multiple of g = " + e.curve.str() + "; remainder",
                        e.witness.str());
            }
            r.warnings.push_back("invariance of " + e.curve.str() +
                                 " is decided in the chart solving " + e.chart_solved);
        }
        comps.push_back(std::move(c));
    }
    r.results["components"] = std::move(comps);
    if (entries.empty()) {
        r.results["invariant"] = true;
        certify(r, "the criminant is empty; invariance holds vacuously", "1");
    } else if (any) {
        r.results["invariant"] = all;
    }
}

void cmd_cs_index(const Flags& fl, Report& r) {
    FormInput in = parse_planar_form(fl.expression("a planar 1-form"));
    r.inputs["form"] = in.echo;
    GaussianRational u0 = fl.point.empty() ? GaussianRational(0)
                                           : parse_point_values(fl.point).at(0);
    r.inputs["point"] = point_str(u0, GaussianRational(0));
    if (!in.removed.is_unit())
        r.warnings.push_back("saturation removed the factor " + in.removed.str());
    const PlanarForm& f = in.form;
    GaussianRational idx = cs_index(f, u0);
    r.results["curve"] = f.v + " = 0";
    r.results["index"] = idx.str();
    MultiPoly atilde = divide_exact(f.a, MultiPoly::variable(f.v))
                           .substitute({{f.v, MultiPoly()}});
    MultiPoly b0 = f.b.substitute({{f.v, MultiPoly()}});
    certify(r, "index = -residue at " + f.u + " = " + u0.str() + " of (" + atilde.str() + ") / (" +
                b0.str() + ")",
            idx.str());
}

void cmd_cs_sum(const Flags& fl, Report& r) {
    std::string text = fl.expression("a 1-form");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    std::set<std::string> ds(diffs.begin(), diffs.end());
    ProjOneForm w;
    if (ds.count("dX") || ds.count("dY") || ds.count("dZ")) {
        expect_vars(diffs, {"dX", "dY", "dZ"}, "a homogeneous 1-form");
        expect_vars(bases, {"X", "Y", "Z"}, "a homogeneous 1-form");
        MultiPoly f = parse_poly(text, {"X", "Y", "Z", "dX", "dY", "dZ"});
        MultiPoly A = f.coeff_of("dX", 1), B = f.coeff_of("dY", 1), C = f.coeff_of("dZ", 1);
        MultiPoly recon = A * MultiPoly::variable("dX") + B * MultiPoly::variable("dY") +
                          C * MultiPoly::variable("dZ");
        if (recon != f)
            throw precondition_error("expression is not linear in dX, dY, dZ");
        w = ProjOneForm{A, B, C};
        validate_proj_one_form(w);
        r.inputs["form"] = proj_one_form_str(w);
    } else {
        FormInput in = parse_planar_form(text);
        if (in.form.u != "x" || in.form.v != "y")
            throw precondition_error("affine input must be a 1-form in (x, y); the invariant "
                                     "line {Y = 0} is the closure of {y = 0}");
        r.inputs["form"] = in.echo;
        if (!in.removed.is_unit())
            r.warnings.push_back("saturation removed the factor " + in.removed.str());
        w = homogenize_affine_form(in.form);
        r.results["homogeneous"] = proj_one_form_str(w);
    }
    CSSumResult sum = cs_sum_line(w);
    json entries = json::array();
    for (const auto& e : sum.entries)
        entries.push_back(json{{"chart", e.chart},
                               {"point", e.point.str()},
                               {"index", e.index.str()}});
    r.results["line"] = "Y = 0";
    r.results["entries"] = std::move(entries);
    r.results["sum"] = sum.sum.str();
    for (const auto& n : sum.notes) r.warnings.push_back(n);
    certify(r, "the indices along the invariant line sum to its self-intersection number",
            sum.sum.str());
}

void cmd_check_integral(const Flags& fl, Report& r) {
    if (fl.form_expr.empty())
        throw precondition_error("check-integral needs the 1-form; pass it with --form");
    FormInput form = parse_planar_form(fl.form_expr);
    r.inputs["form"] = form.echo;
    if (!form.removed.is_unit())
        r.warnings.push_back("saturation removed the factor " + form.removed.str());
    std::string ftext = fl.expression("the candidate integral");
    RationalFunction f = parse_ratfunc(ftext, {form.form.u, form.form.v});
    r.inputs["integral"] = f.str();
    FirstIntegralVerdict v = first_integral_check(f, form.form);
    r.results["first_integral"] = v.first_integral;
    if (v.first_integral)
        certify(r, "the numerator of df ^ (a d" + form.form.u + " + b d" + form.form.v +
                    ") vanishes identically",
                "0");
    else
        certify(r, "df ^ form has the nonzero numerator", v.witness.str());
}

void cmd_check_web_integral(const Flags& fl, Report& r) {
    std::string text = fl.expression("a family polynomial");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (!diffs.empty())
        throw precondition_error("a curve family is a polynomial in (x, y, t)");
    expect_vars(bases, {"x", "y", "t"}, "a curve family");
    MultiPoly P = parse_poly(text, {"x", "y", "t"});
    r.inputs["family"] = P.str();
    std::vector<MultiPoly> factors = parse_factors(fl.factors);
    SurfaceF s;
    if (factors.empty()) {
        CurveFamilyWeb fam = web_from_curve_family(P, "t");
        if (!fam.surface) {
            r.results["ok"] = false;
            r.results["eliminated"] = fam.raw.str();
            r.warnings.push_back("the family eliminates to a p-free polynomial; it envelopes no web");
            certify(r, "Res_t(P, P_x + p P_y) has no p-part", fam.raw.str());
            return;
        }
        s = *fam.surface;
        factors = {s.F};
    } else {
        MultiPoly F = MultiPoly::constant(GaussianRational(1));
        for (const auto& f : factors) F = F * f;
        s = make_surface(F);
        r.inputs["factors"] = factors_json(factors);
    }
    r.inputs["web"] = s.F.str();
    WebIntegralVerdict v = web_first_integral_check(P, "t", s, factors);
    r.results["ok"] = v.ok;
    r.results["eliminated"] = v.eliminated.str();
    r.results["extraneous"] = v.extraneous.str();
    for (const auto& n : v.notes) r.warnings.push_back(n);
    if (v.ok)
        certify(r, "every confirmed component of the web divides the eliminated polynomial",
                v.eliminated.str());
    else
        certify(r, "the eliminated polynomial misses a web component", v.eliminated.str());
}

HermitianPoly parse_hermitian_input(const std::string& text, Report& r) {
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (!diffs.empty())
        throw precondition_error("a Hermitian polynomial lives in (x, y, cx, cy)");
    expect_vars(bases, {"x", "y", "cx", "cy"}, "a Hermitian polynomial");
    HermitianPoly h = make_hermitian(parse_poly(text, {"x", "y", "cx", "cy"}));
    r.inputs["hermitian"] = h.F.str();
    return h;
}

Point2 point2_from_flag(const std::string& text) {
    if (text.empty()) throw precondition_error("this command needs --point \"a, b\"");
    auto vals = parse_point_values(text);
    if (vals.size() != 2)
        throw precondition_error("expected two Gaussian-rational coordinates, got " +
                                 std::to_string(vals.size()));
    return {vals[0], vals[1]};
}

void cmd_segre(const Flags& fl, Report& r, bool variety) {
    HermitianPoly h = parse_hermitian_input(fl.expression("a Hermitian polynomial"), r);
    Point2 p = point2_from_flag(fl.point);
    r.inputs["point"] = point_str(p.first, p.second);
    MultiPoly q = segre_variety(h, p);
    bool degenerate = q.is_zero();
    if (variety) r.results["segre_variety"] = q.str();
    r.results["degenerate"] = degenerate;
    if (degenerate)
        certify(r, "the Segre variety at " + point_str(p.first, p.second) +
                    " is cut out by the zero polynomial: every point satisfies it",
                "0");
    else
        certify(r, "the Segre variety at " + point_str(p.first, p.second) + " is a curve",
                q.str());
}

void cmd_eliminate(const Flags& fl, Report& r) {
    std::string text = fl.expression("a family polynomial");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (!diffs.empty())
        throw precondition_error("a curve family is a polynomial in (x, y, t)");
    expect_vars(bases, {"x", "y", "t"}, "a curve family");
    MultiPoly P = parse_poly(text, {"x", "y", "t"});
    r.inputs["family"] = P.str();
    CurveFamilyWeb fam = web_from_curve_family(P, "t");
    r.results["raw"] = fam.raw.str();
    if (fam.surface) {
        r.results["surface"] = fam.surface->F.str();
        r.results["degree"] = fam.surface->d;
        r.results["extraneous"] = fam.extraneous.str();
        r.results["removed_content"] = fam.normalization.removed_content.str();
        r.results["removed_repeated"] = fam.normalization.removed_repeated.str();
        for (const auto& w : fam.normalization.warnings) r.warnings.push_back(w);
    } else {
        r.results["surface"] = json();
        r.warnings.push_back("Res_t(P, P_x + p P_y) is free of p; the family envelopes no web");
    }
    certify(r, "Res_t(P, P_x + p P_y) before normalization", fam.raw.str());
}

void cmd_tangency(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    if (fl.re_pieces.empty() && fl.im_pieces.empty())
        throw precondition_error("tangency needs at least one piece: --re <h> or --im <h>");
    json pieces = json::array();
    bool all = true;
    auto run_piece = [&](const std::string& text, const char* kind) {
        std::vector<std::string> diffs, bases;
        split_identifiers(text, diffs, bases);
        if (!diffs.empty()) throw precondition_error("pieces are polynomials h(x, y)");
        expect_vars(bases, {"x", "y"}, "a piece");
        MultiPoly h = parse_poly(text, {"x", "y"});
        TangencyVerdict v = tangency_check(in.s, h);
        json e;
        e["h"] = h.str();
        e["kind"] = kind;
        e["tangent"] = v.tangent;
        pieces.push_back(std::move(e));
        all = all && v.tangent;
        std::string label = std::string(kind) + "(" + h.str() + ") = 0";
        if (v.tangent)
            certify(r, "F(x, y, -h_x/h_y) vanishes identically for " + label, "0");
        else
            certify(r, "F(x, y, -h_x/h_y) has the nonzero numerator for " + label,
                    v.witness.str());
        for (const auto& n : v.notes) r.warnings.push_back(n);
    };
    for (const auto& t : fl.re_pieces) run_piece(t, "Re");
    for (const auto& t : fl.im_pieces) run_piece(t, "Im");
    r.results["pieces"] = std::move(pieces);
    r.results["tangent"] = all;
}

void cmd_dual_web(const Flags& fl, Report& r) {
    std::string text = fl.expression("a plane curve");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (!diffs.empty()) throw precondition_error("a plane curve is a polynomial in (q0, q1, q2)");
    expect_vars(bases, {"q0", "q1", "q2"}, "a plane curve");
    MultiPoly G = parse_poly(text, {"q0", "q1", "q2"});
    r.inputs["curve"] = G.str();
    DualWeb dw = dual_web(G);
    r.results["surface"] = dw.surface.F.str();
    r.results["degree"] = dw.surface.d;
    r.results["removed_content"] = dw.normalization.removed_content.str();
    r.results["removed_repeated"] = dw.normalization.removed_repeated.str();
    for (const auto& w : dw.normalization.warnings) r.warnings.push_back(w);
    MultiPoly sub = G.substitute({{"q0", -MultiPoly::variable("p")},
                                  {"q1", MultiPoly::constant(GaussianRational(1))},
                                  {"q2", MultiPoly::variable("x") * MultiPoly::variable("p") -
                                             MultiPoly::variable("y")}});
    certify(r, "G(-p, 1, x p - y) before normalization", sub.str());
}

HomSymForm parse_hom_form(const std::string& text, Report& r) {
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    expect_vars(diffs, {"dX", "dY", "dZ"}, "a homogeneous symmetric form");
    expect_vars(bases, {"X", "Y", "Z"}, "a homogeneous symmetric form");
    HomSymForm w = make_hom_sym_form(parse_poly(text, {"X", "Y", "Z", "dX", "dY", "dZ"}));
    r.inputs["form"] = w.form.str();
    return w;
}

void cmd_hom_resultant(const Flags& fl, Report& r) {
    std::string text = fl.expression("a homogeneous family");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    if (!diffs.empty())
        throw precondition_error("a homogeneous family is a polynomial in (X, Y, Z, t)");
    expect_vars(bases, {"X", "Y", "Z", "t"}, "a homogeneous family");
    MultiPoly G = parse_poly(text, {"X", "Y", "Z", "t"});
    r.inputs["family"] = G.str();
    FamilyResultant res = hom_family_resultant(G, "t");
    r.results["form"] = res.form.form.str();
    r.results["coord_degree"] = res.form.coord_deg;
    r.results["diff_degree"] = res.form.diff_deg;
    r.results["raw"] = res.raw.str();
    r.results["removed_content"] = res.removed_content.str();
    r.results["removed_repeated"] = res.removed_repeated.str();
    r.results["descends"] = res.descends;
    MultiPoly ec = euler_contraction(res.form);
    if (res.descends)
        certify(r, "the Euler contraction of the form vanishes; it descends to the plane", "0");
    else
        certify(r, "the Euler contraction is nonzero; the form does not descend", ec.str());
}

void cmd_restrict(const Flags& fl, Report& r) {
    HomSymForm w = parse_hom_form(fl.expression("a homogeneous symmetric form"), r);
    MultiPoly ec = euler_contraction(w);
    if (!ec.is_zero())
        throw precondition_error("the form does not descend to the plane; Euler contraction = " +
                                 ec.str());
    Chart chart = chart_from_name(fl.chart);
    r.inputs["chart"] = chart_name(chart);
    ChartWeb cw = restrict_chart(w, chart);
    auto vars = chart_vars(chart);
    r.results["vars"] = "(" + vars.first + ", " + vars.second + ")";
    r.results["web"] = cw.web.str();
    r.results["surface"] = web_to_surface(cw.web).F.str();
    r.results["removed_content"] = cw.normalization.removed_content.str();
    r.results["removed_repeated"] = cw.normalization.removed_repeated.str();
    for (const auto& n : cw.normalization.warnings) r.warnings.push_back(n);
    certify(r, "the form descends (Euler contraction vanishes)", "0");
}

void cmd_transition(const Flags& fl, Report& r) {
    Chart from = chart_from_name(fl.chart);
    Chart to = chart_from_name(fl.to_chart);
    if (from == to) throw precondition_error("source and target charts coincide");
    auto fv = chart_vars(from);
    std::string text = fl.expression("an affine web form");
    std::vector<std::string> diffs, bases;
    split_identifiers(text, diffs, bases);
    expect_vars(diffs, {"d" + fv.first, "d" + fv.second},
                "a web form in the " + chart_name(from) + " chart");
    expect_vars(bases, {fv.first, fv.second}, "a web form in the " + chart_name(from) + " chart");
    WebForm w = web_from_form_poly(
        parse_poly(text, {fv.first, fv.second, "d" + fv.first, "d" + fv.second}), fv.first,
        fv.second);
    r.inputs["web"] = w.str();
    r.inputs["from"] = chart_name(from);
    r.inputs["to"] = chart_name(to);
    ChartWeb cw = chart_transition(w, from, to);
    auto tv = chart_vars(to);
    r.results["vars"] = "(" + tv.first + ", " + tv.second + ")";
    r.results["web"] = cw.web.str();
    r.results["removed_content"] = cw.normalization.removed_content.str();
    r.results["removed_repeated"] = cw.normalization.removed_repeated.str();
    for (const auto& n : cw.normalization.warnings) r.warnings.push_back(n);
}

void cmd_descend_check(const Flags& fl, Report& r) {
    HomSymForm w = parse_hom_form(fl.expression("a homogeneous symmetric form"), r);
    MultiPoly ec = euler_contraction(w);
    r.results["coord_degree"] = w.coord_deg;
    r.results["diff_degree"] = w.diff_deg;
    r.results["descends"] = ec.is_zero();
    r.results["contraction"] = ec.str();
    if (ec.is_zero())
        certify(r, "the contraction with X d/d(dX) + Y d/d(dY) + Z d/d(dZ) vanishes", "0");
    else
        certify(r, "the contraction with the radial field is nonzero", ec.str());
}

void cmd_degree(const Flags& fl, Report& r) {
    WebInput in = parse_web_input(fl.expression("a web"));
    r.inputs["web"] = in.s.F.str();
    if (fl.trials < 1) throw precondition_error("--trials must be at least 1");
    r.inputs["trials"] = fl.trials;
    r.inputs["seed"] = fl.seed;
    WebDegreeResult res = web_degree(in.s, fl.trials, fl.seed);
    r.results["degree"] = res.degree;
    r.results["achieved"] = res.achieved;
    r.results["degenerate"] = res.degenerate;
    json counts = json::array();
    for (int c : res.counts) counts.push_back(c);
    r.results["counts"] = std::move(counts);
    if (res.degenerate > 0)
        r.warnings.push_back(std::to_string(res.degenerate) +
                             " sampled line(s) were tangent everywhere and were discarded");
    certify(r, "tangency counts of F with the sampled affine lines y = m x + c",
            r.results["counts"].dump());
}

// ---------------------------------------------------------------------------
// fixtures runner

bool json_subset(const json& expected, const json& actual, std::string& where) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            where += " (expected an object)";
            return false;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key())) {
                where += "." + it.key() + " missing";
                return false;
            }
            std::string sub = where + "." + it.key();
            if (!json_subset(it.value(), actual.at(it.key()), sub)) {
                where = sub;
                return false;
            }
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || expected.size() != actual.size()) {
            where += ": expected " + std::to_string(expected.size()) + " entries, got " +
                     (actual.is_array() ? std::to_string(actual.size()) : actual.dump());
            return false;
        }
        for (std::size_t k = 0; k < expected.size(); ++k) {
            std::string sub = where + "[" + std::to_string(k) + "]";
            if (!json_subset(expected.at(k), actual.at(k), sub)) {
                where = sub;
                return false;
            }
        }
        return true;
    }
    if (expected != actual) {
        where += ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

int cmd_fixtures(const Flags& fl, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------

int fail(const std::string& command, bool json_mode, int code, const std::string& type,
         const std::string& message, std::ostream& out, std::ostream& err) {
    if (json_mode) {
        json doc;
        doc["command"] = command;
        doc["error"] = json{{"type", type}, {"message", message}};
        doc["version"] = kVersion;
        out << doc.dump(2) << "\n";
    } else {
        err << "error (" << type << "): " << message << "\n";
    }
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for webs and foliations on complex surface charts"};
    app.require_subcommand(1);
    Flags fl;

    auto add_cmd = [&](const std::string& name, const std::string& desc, bool with_expr = true) {
        CLI::App* c = app.add_subcommand(name, desc);
        if (with_expr) {
            c->add_option("-e,--expr", fl.expr, "inline expression");
            c->add_option("--input", fl.input_path, "file holding the expression");
        }
        c->add_flag("--json", fl.json_mode, "emit the report as JSON");
        return c;
    };

    CLI::App* c_normalize = add_cmd("normalize",
                                    "remove coefficient content and repeated p-factors of a web");
    CLI::App* c_surface = add_cmd("surface", "surface model F(x, y, p) of a web form, and back");
    CLI::App* c_discriminant = add_cmd("discriminant", "caustic: squarefree Res_p(F, F_p)");
    CLI::App* c_criminant = add_cmd("criminant", "the locus {F = F_p = 0}, triangularized");
    CLI::App* c_singlocus =
        add_cmd("singlocus", "singular locus of a planar 1-form or of a web's restriction");
    c_singlocus->add_option("--factor", fl.factors, "web component factor (repeatable)");
    CLI::App* c_dicritical = add_cmd("dicritical", "is the restricted foliation regular?");
    c_dicritical->add_option("--factor", fl.factors, "web component factor (repeatable)");
    CLI::App* c_crim_inv =
        add_cmd("criminant-invariance", "invariance of the criminant components under the web's foliation");
    CLI::App* c_cs_index = add_cmd("cs-index", "index along {v = 0} at (u, v) = (point, 0)");
    c_cs_index->add_option("--point", fl.point, "u-coordinate of the singular point (default 0)");
    CLI::App* c_cs_sum = add_cmd("cs-sum", "indices along the invariant line {Y = 0} and their sum");
    CLI::App* c_check_integral = add_cmd("check-integral", "is f constant on the leaves of a 1-form?");
    c_check_integral->add_option("--form", fl.form_expr, "the planar 1-form");
    CLI::App* c_check_web =
        add_cmd("check-web-integral", "do the level curves of a family integrate the web?");
    c_check_web->add_option("--factor", fl.factors, "web component factor (repeatable)");
    CLI::App* c_segre = add_cmd("segre", "Segre variety of a Hermitian polynomial at a point");
    c_segre->add_option("--point", fl.point, "the point, as \"a, b\"");
    CLI::App* c_segre_deg = add_cmd("segre-degenerate", "is the Segre variety at the point degenerate?");
    c_segre_deg->add_option("--point", fl.point, "the point, as \"a, b\"");
    CLI::App* c_eliminate = add_cmd("eliminate", "web enveloped by a curve family P(x, y, t)");
    CLI::App* c_tangency = add_cmd("tangency", "is the web tangent to the pieces Re(h)=0 / Im(h)=0?");
    c_tangency->add_option("--re", fl.re_pieces, "piece Re(h) = 0 (repeatable)");
    c_tangency->add_option("--im", fl.im_pieces, "piece Im(h) = 0 (repeatable)");
    CLI::App* c_dual = add_cmd("dual-web", "web dual to a plane curve G(q0, q1, q2)");
    CLI::App* c_homres = add_cmd("hom-resultant", "Res_t(G, dG) of a homogeneous family");
    CLI::App* c_restrict = add_cmd("restrict", "restrict a homogeneous symmetric form to a chart");
    c_restrict->add_option("--chart", fl.chart, "chart z|x|y (default z)");
    CLI::App* c_transition = add_cmd("transition", "rewrite an affine web form over another chart");
    c_transition->add_option("--chart", fl.chart, "source chart z|x|y (default z)");
    c_transition->add_option("--to", fl.to_chart, "target chart z|x|y (default x)");
    CLI::App* c_descend = add_cmd("descend-check", "does a homogeneous symmetric form descend?");
    CLI::App* c_degree = add_cmd("degree", "web degree by tangency counts with sampled lines");
    c_degree->add_option("--trials", fl.trials, "number of sampled lines (default 5)");
    c_degree->add_option("--seed", fl.seed, "seed for the line sampler");
    CLI::App* c_fixtures = add_cmd("fixtures", "run the bundled golden-fixture corpus", false);
    c_fixtures->add_option("--run", fl.run, "fixture name, or 'all' (default)");
    c_fixtures->add_option("--dir", fl.dir, "fixture directory (default: $HOLOWEB_FIXTURES or ./fixtures)");

    std::vector<const char*> argv;
    argv.push_back("holoweb");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err); // prints the relevant help text, returns 0
    } catch (const CLI::ParseError& e) {
        err << "error (usage): " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        if (sub == c_fixtures) return cmd_fixtures(fl, out, err);
        Report r;
        r.command = command;
        if (sub == c_normalize) cmd_normalize(fl, r);
        else if (sub == c_surface) cmd_surface(fl, r);
        else if (sub == c_discriminant) cmd_discriminant(fl, r);
        else if (sub == c_criminant) cmd_criminant(fl, r);
        else if (sub == c_singlocus) cmd_singlocus(fl, r);
        else if (sub == c_dicritical) cmd_dicritical(fl, r);
        else if (sub == c_crim_inv) cmd_criminant_invariance(fl, r);
        else if (sub == c_cs_index) cmd_cs_index(fl, r);
        else if (sub == c_cs_sum) cmd_cs_sum(fl, r);
        else if (sub == c_check_integral) cmd_check_integral(fl, r);
        else if (sub == c_check_web) cmd_check_web_integral(fl, r);
        else if (sub == c_segre) cmd_segre(fl, r, true);
        else if (sub == c_segre_deg) cmd_segre(fl, r, false);
        else if (sub == c_eliminate) cmd_eliminate(fl, r);
        else if (sub == c_tangency) cmd_tangency(fl, r);
        else if (sub == c_dual) cmd_dual_web(fl, r);
        else if (sub == c_homres) cmd_hom_resultant(fl, r);
        else if (sub == c_restrict) cmd_restrict(fl, r);
        else if (sub == c_transition) cmd_transition(fl, r);
        else if (sub == c_descend) cmd_descend_check(fl, r);
        else if (sub == c_degree) cmd_degree(fl, r);
        else throw std::logic_error("unhandled subcommand " + command);
        emit(r, fl.json_mode, out);
        return 0;
    } catch (const parse_error& e) {
        return fail(command, fl.json_mode, 3, "parse", e.what(), out, err);
    } catch (const precondition_error& e) {
        return fail(command, fl.json_mode, 2, "precondition", e.what(), out, err);
    } catch (const std::exception& e) {
        return fail(command, fl.json_mode, 1, "internal", e.what(), out, err);
    }
}

namespace {

int cmd_fixtures(const Flags& fl, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::string dir = fl.dir;
    if (dir.empty()) {
        const char* env = std::getenv("HOLOWEB_FIXTURES");
        dir = env ? env : "fixtures";
    }
    if (!fs::is_directory(dir))
        throw precondition_error("fixture directory '" + dir + "' does not exist");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    json cases = json::array();
    int passed = 0, failed = 0;
    for (const auto& path : files) {
        std::string name = path.stem().string();
        if (fl.run != "all" && fl.run != name) continue;
        std::ifstream in(path);
        json fx;
        try {
            in >> fx;
        } catch (const json::exception& e) {
            throw precondition_error("fixture " + name + " is not valid JSON: " + e.what());
        }
        if (!fx.contains("argv") || !fx["argv"].is_array())
            throw precondition_error("fixture " + name + " has no argv array");
        std::vector<std::string> argv;
        for (const auto& a : fx["argv"]) argv.push_back(a.get<std::string>());
        if (!argv.empty() && argv[0] == "fixtures")
            throw precondition_error("fixture " + name + " tries to nest the fixtures runner");
        if (std::find(argv.begin(), argv.end(), "--json") == argv.end())
            argv.push_back("--json");

        std::ostringstream sub_out, sub_err;
        int code = run_cli(argv, sub_out, sub_err);

        const json expect = fx.value("expect", json::object());
        int want_code = expect.value("exit", 0);
        bool ok = true;
        std::string detail;
        if (code != want_code) {
            ok = false;
            detail = "exit code " + std::to_string(code) + ", expected " +
                     std::to_string(want_code);
            std::string msg = sub_err.str();
            if (!msg.empty()) detail += "; " + msg;
        } else {
            json doc;
            try {
                doc = json::parse(sub_out.str());
            } catch (const json::exception&) {
                ok = false;
                detail = "output is not JSON";
            }
            if (ok && expect.contains("results")) {
                std::string where = "results";
                if (!json_subset(expect["results"], doc.value("results", json::object()), where)) {
                    ok = false;
                    detail = where;
                }
            }
            if (ok && expect.contains("error_contains")) {
                std::string msg = doc.contains("error")
                                      ? doc["error"].value("message", std::string())
                                      : std::string();
                if (msg.find(expect["error_contains"].get<std::string>()) == std::string::npos) {
                    ok = false;
                    detail = "error message '" + msg + "' does not mention '" +
                             expect["error_contains"].get<std::string>() + "'";
                }
            }
            if (ok && expect.contains("warnings_contain")) {
                for (const auto& frag : expect["warnings_contain"]) {
                    bool found = false;
                    for (const auto& w : doc.value("warnings", json::array()))
                        if (w.get<std::string>().find(frag.get<std::string>()) !=
                            std::string::npos)
                            found = true;
                    if (!found) {
                        ok = false;
                        detail = "no warning mentions '" + frag.get<std::string>() + "'";
                        break;
                    }
                }
            }
        }
        (ok ? passed : failed)++;
        cases.push_back(json{{"name", name},
                             {"status", ok ? "pass" : "fail"},
                             {"detail", detail}});
    }
    if (cases.empty())
        throw precondition_error(fl.run == "all" ? "no fixtures found in '" + dir + "'"
                                                 : "no fixture named '" + fl.run + "'");

    if (fl.json_mode) {
        json doc;
        doc["command"] = "fixtures";
        doc["inputs"] = json{{"dir", dir}, {"run", fl.run}};
        doc["results"] =
            json{{"total", passed + failed}, {"passed", passed}, {"failed", failed},
                 {"cases", cases}};
        doc["certificates"] = json::array();
        doc["warnings"] = json::array();
        doc["version"] = kVersion;
        out << doc.dump(2) << "\n";
    } else {
        std::size_t width = 7;
        for (const auto& c : cases) width = std::max(width, c["name"].get<std::string>().size());
        out << "command: fixtures\n";
        for (const auto& c : cases) {
            std::string name = c["name"].get<std::string>();
            out << "  " << name << std::string(width - name.size() + 2, ' ')
                << c["status"].get<std::string>();
            if (!c["detail"].get<std::string>().empty())
                out << "  [" << c["detail"].get<std::string>() << "]";
            out << "\n";
        }
        out << "total: " << (passed + failed) << "  passed: " << passed << "  failed: " << failed
            << "\n";
    }
    if (failed > 0) {
        err << failed << " fixture(s) failed\n";
        return 2;
    }
    return 0;
}

} // namespace

} // namespace holoweb
