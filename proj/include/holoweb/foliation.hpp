#pragma once

#include "holoweb/web.hpp"

namespace holoweb {

// Is f constant on the leaves of the planar form? Exact: the wedge
// df ^ (a du + b dv) must vanish identically.
struct FirstIntegralVerdict {
    bool first_integral = false;
    MultiPoly witness; // numerator of f_u b - f_v a when nonzero
};
FirstIntegralVerdict first_integral_check(const RationalFunction& f, const PlanarForm& form);

// Index of the foliation a du + b dv along the invariant curve {v = 0} at the
// point (u, v) = (u0, 0), as an exact residue:
//   index = -res_{u=u0} ( (a/v)(u, 0) / b(u, 0) ).
// Preconditions: v divides a (invariance) and b(u, 0) is not identically 0.
GaussianRational cs_index(const PlanarForm& form, const GaussianRational& u0);

// A 1-form A dX + B dY + C dZ on homogeneous coordinates, with the Euler
// identity X A + Y B + Z C = 0 so it descends to the projective plane.
struct ProjOneForm {
    MultiPoly A, B, C; // in X, Y, Z, homogeneous of one common degree
};

// Clears denominators of a (x, y)-chart form into homogeneous coordinates
// and saturates; the Euler identity holds by construction.
ProjOneForm homogenize_affine_form(const PlanarForm& form);

// Validates homogeneity, the Euler identity, and saturation.
void validate_proj_one_form(const ProjOneForm& w);

// Indices of the foliation along the invariant line {Y = 0}, summed over all
// of its singular points (including [1:0:0]), each as an exact residue. The
// total equals the self-intersection number of the line.
struct LineIndexEntry {
    std::string chart;      // "z" for (x, y) points, "x" for [1:0:0]
    GaussianRational point; // coordinate of the singular point on the line
    GaussianRational index;
};
struct CSSumResult {
    GaussianRational sum;
    std::vector<LineIndexEntry> entries;
    std::vector<std::string> notes;
};
CSSumResult cs_sum_line(const ProjOneForm& w);

// Does the curve family {P(x, y, t) = 0} integrate the web F? Exact check
// through parameter elimination: every confirmed component factor of F must
// divide the eliminated web polynomial.
struct WebIntegralVerdict {
    bool ok = false;
    MultiPoly eliminated; // normalized envelope web of the family (0 if none)
    MultiPoly extraneous; // cofactor of the factor product inside eliminated
    std::vector<std::string> notes;
};
WebIntegralVerdict web_first_integral_check(const MultiPoly& P, const std::string& param,
                                            const SurfaceF& s,
                                            const std::vector<MultiPoly>& factors);

} // namespace holoweb
