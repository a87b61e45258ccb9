#include "holoweb/segre.hpp"

#include <algorithm>

namespace holoweb {

MultiPoly conj_coeffs(const MultiPoly& f) {
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c.conj());
    return out;
}

namespace {

const std::vector<std::string> kHermVars{"cx", "cy", "x", "y"}; // alphabet order

std::string monomial_desc(const std::vector<std::string>& vars, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace

bool reality_check(const MultiPoly& F, std::string* why) {
    MultiPoly f = F.with_vars(kHermVars);
    for (const auto& v : f.vars()) {
        if (f.uses(v) && v != "x" && v != "y" && v != "cx" && v != "cy") {
            if (why) *why = "unexpected variable '" + v + "'";
            return false;
        }
    }
    // Alphabet is (cx, cy, x, y); the partner of (a, b, c, d) is (c, d, a, b).
    std::size_t icx = 0, icy = 0, ix = 0, iy = 0;
    const auto& vars = f.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "cx") icx = i;
        if (vars[i] == "cy") icy = i;
        if (vars[i] == "x") ix = i;
        if (vars[i] == "y") iy = i;
    }
    for (const auto& [e, c] : f.terms()) {
        Exponents partner(e.size(), 0);
        partner[icx] = e[ix];
        partner[icy] = e[iy];
        partner[ix] = e[icx];
        partner[iy] = e[icy];
        auto it = f.terms().find(partner);
        GaussianRational pc = (it == f.terms().end()) ? GaussianRational(0) : it->second;
        if (pc != c.conj()) {
            if (why)
                *why = "coefficient of " + monomial_desc(vars, e) + " is " + c.str() +
                       " but its conjugate partner " + monomial_desc(vars, partner) + " carries " +
                       pc.str();
            return false;
        }
    }
    return true;
}

HermitianPoly make_hermitian(const MultiPoly& F) {
    if (F.is_zero()) throw precondition_error("hermitian polynomial is identically zero");
    std::string why;
    if (!reality_check(F, &why))
        throw precondition_error("polynomial fails the reality condition: " + why);
    return HermitianPoly{F.with_vars(kHermVars)};
}

MultiPoly segre_variety(const HermitianPoly& h, const Point2& w) {
    return h.F.substitute({{"cx", MultiPoly::constant(w.first.conj())},
                           {"cy", MultiPoly::constant(w.second.conj())}});
}

bool is_segre_degenerate(const HermitianPoly& h, const Point2& w) {
    return segre_variety(h, w).is_zero();
}

MultiPoly segre_family(const HermitianPoly& h, const Point2& c, const Point2& c0) {
    if (c.first.is_zero() && c.second.is_zero())
        throw precondition_error("family direction is zero");
    MultiPoly t = MultiPoly::variable("t");
    MultiPoly w1 = c.first.conj() * t + MultiPoly::constant(c0.first.conj());
    MultiPoly w2 = c.second.conj() * t + MultiPoly::constant(c0.second.conj());
    return h.F.substitute({{"cx", w1}, {"cy", w2}});
}

TangencyVerdict tangency_check(const SurfaceF& s, const MultiPoly& h) {
    TangencyVerdict out;
    if (h.is_constant()) throw precondition_error("level function is constant");
    for (const auto& v : h.vars())
        if (h.uses(v) && v != "x" && v != "y")
            throw precondition_error("level function must be a polynomial in x, y");
    MultiPoly hx = h.derivative("x"), hy = h.derivative("y");
    if (hy.is_zero()) {
        // Leaves are vertical lines {x = const}; a surface model (top
        // p-coefficient nonzero by construction) never contains them.
        out.tangent = false;
        out.witness = s.F.lead_coeff_in("p");
        out.notes.push_back("leaves are vertical; the p-chart surface carries no vertical branch");
        return out;
    }
    // Leaf direction: p = -h_x / h_y.
    RationalFunction slope = RationalFunction(-hx, hy);
    RationalFunction val = substitute(s.F, {{"p", slope}});
    out.tangent = val.is_zero();
    if (!out.tangent) out.witness = val.num();
    return out;
}

} // namespace holoweb
