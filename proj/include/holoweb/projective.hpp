#pragma once

#include "holoweb/web.hpp"

namespace holoweb {

// Symmetric d-form on homogeneous coordinates: a polynomial in
// (X, Y, Z, dX, dY, dZ), homogeneous separately in the coordinates and in
// the differentials (differential degree >= 1).
struct HomSymForm {
    MultiPoly form;
    int coord_deg = 0;
    int diff_deg = 0;
};

// Validates bihomogeneity and variable usage.
HomSymForm make_hom_sym_form(const MultiPoly& f);

// Contraction with the radial (Euler) field: X d/d(dX) + Y d/d(dY) + Z d/d(dZ).
// Vanishes exactly when the form descends to the projective plane.
MultiPoly euler_contraction(const HomSymForm& w);

enum class Chart { Z, X, Y };
Chart chart_from_name(const std::string& name);
std::string chart_name(Chart c);
// Affine coordinate names per chart: Z -> (x, y), X -> (u, v), Y -> (s, t).
std::pair<std::string, std::string> chart_vars(Chart c);

struct ChartWeb {
    WebForm web; // normalized
    NormalizedWeb normalization;
};

// Substitutes the chart section (e.g. Z = 1, dZ = 0 with X = x, Y = y) and
// regroups into a web form, normalized. Throws when the form vanishes there.
ChartWeb restrict_chart(const HomSymForm& w, Chart chart);

// Rewrites a chart web over another chart: rational coordinate change, clear
// denominators, normalize. Round-trips to the original normalized web.
ChartWeb chart_transition(const WebForm& w, Chart from, Chart to);

// Web of tangents swept by a family of plane curves G(X, Y, Z, t): the
// resultant of G and its coordinate differential with respect to t. Entries
// of the family must be homogeneous in (X, Y, Z) of one common degree.
struct FamilyResultant {
    HomSymForm form; // normalized (coordinate content and repeated
                     // differential factors removed)
    MultiPoly raw;
    MultiPoly removed_content;
    MultiPoly removed_repeated;
    bool descends = false; // euler_contraction == 0
};
FamilyResultant hom_family_resultant(const MultiPoly& G, const std::string& param);

// Web dual to the plane curve {G(q0, q1, q2) = 0}: tangent lines of the
// curve, written in the (x, y) chart of the dual plane. Substitution
// F(x, y, p) = G(-p, 1, x p - y), then web normalization.
struct DualWeb {
    SurfaceF surface;
    NormalizedWeb normalization;
};
DualWeb dual_web(const MultiPoly& G);

// Tangency count against random affine lines y = m x + c: the degree of a
// web is the generic number of such tangencies. Exact counts per draw;
// degenerate draws (identically vanishing restriction) are reported.
struct WebDegreeResult {
    int degree = 0; // maximum count over valid draws
    int achieved = 0; // draws realizing the maximum
    int degenerate = 0;
    int trials = 0;
    std::vector<int> counts;
};
WebDegreeResult web_degree(const SurfaceF& s, int trials, unsigned long seed);

} // namespace holoweb
