#pragma once

#include "holoweb/parser.hpp"
#include "holoweb/polyops.hpp"
#include "holoweb/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holoweb {

// A d-web written as a symmetric differential form
//   sum_j coeffs[j] * d<x>^(d-j) d<y>^j
// over the affine chart coordinates (x, y) (names are kept explicit so the
// same machinery serves every chart).
struct WebForm {
    std::string x = "x", y = "y";
    std::vector<MultiPoly> coeffs; // size d+1, entries in the chart variables

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // The defining polynomial as a form in (x, y, dx, dy).
    MultiPoly form_poly() const;
    std::string str() const;
};

// The same web as a surface F(x, y, p) = sum coeffs[j] p^j with p = dy/dx.
struct SurfaceF {
    MultiPoly F; // in x, y, p
    int d = 0;   // degree in p
};

// a d<u> + b d<v> on a two-dimensional chart.
struct PlanarForm {
    std::string u = "x", v = "y";
    MultiPoly a, b;
    std::string str() const;
};

// Builds a WebForm from a polynomial in (x, y, dx, dy); the differential part
// must be homogeneous.
WebForm web_from_form_poly(const MultiPoly& form, const std::string& x = "x", const std::string& y = "y");

SurfaceF web_to_surface(const WebForm& w);
WebForm surface_to_web(const SurfaceF& s);

// Checks shape: nonzero, positive degree in p, squarefree in p, coefficient
// content trivial. Throws precondition_error otherwise.
SurfaceF make_surface(const MultiPoly& F);

struct NormalizedWeb {
    WebForm web;
    MultiPoly removed_content;  // monic; 1 when nothing was removed
    MultiPoly removed_repeated; // gcd with the p-derivative that was divided out; 1 if none
    std::vector<std::string> warnings;
};

// Divides out coefficient content and repeated p-factors, then scales so the
// graded-lex leading coefficient of F is 1.
NormalizedWeb normalize_web(const WebForm& w);

// (F_p, p F_p, -(F_x + p F_y)): the line field on the surface induced by the
// contact structure dy - p dx.
struct ContactField {
    MultiPoly x_comp, y_comp, p_comp;
};
ContactField contact_field(const SurfaceF& s);

// Graph-style chart on the surface: `solved` is the coordinate eliminated via
// solved = -B/A, the chart keeps (u, v).
struct GraphChart {
    std::string solved;
    std::string u, v;
    MultiPoly A, B;
};

// Charts available for s, in the preference order y, x, p (a chart exists
// when F is linear in that coordinate).
std::vector<GraphChart> graph_charts(const SurfaceF& s);

// Restriction of dy - p dx to the surface in the given chart, saturated and
// scaled to a unit leading coefficient. Throws when the restriction vanishes.
PlanarForm planar_restriction_in(const SurfaceF& s, const GraphChart& chart);
// First available chart.
PlanarForm planar_restriction(const SurfaceF& s);

// {F = F_p = 0} together with a triangular description when F_p is linear in
// one coordinate with constant leading coefficient.
struct CriminantComponent {
    MultiPoly factor;   // irreducible-piece generator from the eliminated polynomial
    MultiPoly relation; // the solved-coordinate relation reduced modulo factor
};
struct CriminantResult {
    std::vector<MultiPoly> generators; // {F, F_p}
    bool empty = false;                // the ideal contains a unit
    std::string solved_var;            // empty when no triangular form was found
    MultiPoly relation;                // solved variable minus its expression
    MultiPoly eliminated;              // F after substitution, monic
    std::vector<CriminantComponent> components;
};
CriminantResult criminant(const SurfaceF& s);

// Squarefree projection of the criminant: caustic = squarefree Res_p(F, F_p)
// with contributions coming only from the leading coefficient split off.
struct DiscriminantCurve {
    MultiPoly resultant_raw;
    MultiPoly caustic;   // squarefree, monic; 1 when empty
    MultiPoly lc_factor; // factors of the caustic that came from lc_p(F) alone
    std::vector<std::string> notes;
};
DiscriminantCurve discriminant_curve(const SurfaceF& s);

// Zero locus of the saturated planar form.
struct SingularLocus {
    MultiPoly a, b;              // saturated pair
    MultiPoly removed_common;    // gcd divided out; 1 if none
    bool empty = false;          // no common zeros on the chart
    bool finite = true;          // always true after saturation
};
SingularLocus foliation_singular_locus(const PlanarForm& f);

// Is the affine zero set of the (coprime) pair empty? Exact decision via a
// shear making both leading coefficients constant, then one resultant.
bool affine_locus_empty(const MultiPoly& a, const MultiPoly& b, const std::string& u, const std::string& v);

// A web branch is dicritical when its saturated planar restriction has no
// singular points at all (the contact line field is transverse everywhere).
struct DicriticalVerdict {
    bool dicritical = false;
    GraphChart chart;
    PlanarForm restriction;
    SingularLocus locus;
};
DicriticalVerdict dicritical(const SurfaceF& s);

// Does the dual vector field of the form leave {g = 0} invariant? Exact:
// membership of the derivative in the principal ideal (g).
struct InvarianceVerdict {
    bool invariant = false;
    MultiPoly derivative; // b g_u - a g_v
    MultiPoly witness;    // cofactor when invariant, remainder otherwise
};
InvarianceVerdict invariant_curve_check(const PlanarForm& f, const MultiPoly& g);

// Criminant components pushed into a surface chart where they stay curves,
// each tested for invariance under the restricted foliation.
struct InvarianceEntry {
    std::vector<MultiPoly> component; // generators in (x, y, p)
    bool skipped = false;
    std::string note;
    std::string chart_solved; // chart that exhibited the component as a curve
    std::string chart_u, chart_v;
    MultiPoly curve;
    bool invariant = false;
    MultiPoly derivative; // b g_u - a g_v of the check
    MultiPoly witness;    // cofactor when invariant, remainder otherwise
};
std::vector<InvarianceEntry> criminant_invariance(const SurfaceF& s);

// Checks that the given factors multiply to F up to a constant, pairwise
// coprime and nonconstant. Throws precondition_error when they do not.
void verify_factorization(const MultiPoly& F, const std::vector<MultiPoly>& factors);

// Web cut out by a family of plane curves {P(x, y, t) = 0}: eliminate the
// parameter from P and the tangency condition P_x + p P_y.
struct CurveFamilyWeb {
    std::optional<SurfaceF> surface; // empty when the elimination is p-free
    MultiPoly raw;                   // Res_t(P, P_x + p P_y) before normalization
    MultiPoly extraneous;            // raw / F, monic
    NormalizedWeb normalization;
};
CurveFamilyWeb web_from_curve_family(const MultiPoly& P, const std::string& param);

} // namespace holoweb
