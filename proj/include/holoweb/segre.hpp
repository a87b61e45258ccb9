#pragma once

#include "holoweb/web.hpp"

#include <utility>

namespace holoweb {

// A real polynomial on C^2 written in complexified form: F(x, y, cx, cy)
// where (cx, cy) stand for the conjugated coordinates. Reality means
// F(z, conj z) is real for every z, i.e. coefficients pair up under
// conjugation when the (x, y) and (cx, cy) exponents are exchanged.
struct HermitianPoly {
    MultiPoly F; // in x, y, cx, cy
};

// Coefficient-wise complex conjugation.
MultiPoly conj_coeffs(const MultiPoly& f);

// Exact reality test; returns the first offending monomial pair description
// in *why when given.
bool reality_check(const MultiPoly& F, std::string* why = nullptr);

// Validates variables and reality.
HermitianPoly make_hermitian(const MultiPoly& F);

using Point2 = std::pair<GaussianRational, GaussianRational>;

// The fibre of the conjugate-slot family over w: F(x, y, conj w1, conj w2),
// a polynomial in (x, y). Identically zero exactly at degenerate parameters.
MultiPoly segre_variety(const HermitianPoly& h, const Point2& w);

bool is_segre_degenerate(const HermitianPoly& h, const Point2& w);

// One-parameter slice of the family along the affine line w(t) = c t + c0
// (t the real parameter): P(x, y, t) = F(x, y, conj(c1) t + conj(c01),
// conj(c2) t + conj(c02)).
MultiPoly segre_family(const HermitianPoly& h, const Point2& c, const Point2& c0);

// Tangency of the web to the level foliation of Re(h) = 0 or Im(h) = 0. For
// holomorphic h both level families share the leaves {h = const}, so the two
// kinds agree; the kind is recorded for reporting only.
struct TangencyVerdict {
    bool tangent = false;
    MultiPoly witness; // numerator of F(x, y, -h_x/h_y), zero iff tangent
    std::vector<std::string> notes;
};
TangencyVerdict tangency_check(const SurfaceF& s, const MultiPoly& h);

} // namespace holoweb
