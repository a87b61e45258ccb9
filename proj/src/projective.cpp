#include "holoweb/projective.hpp"

#include <random>

namespace holoweb {

namespace {

const std::vector<std::string> kHomVars{"X", "Y", "Z", "dX", "dY", "dZ"};

MultiPoly one() { return MultiPoly::constant(GaussianRational(1)); }

bool is_coord(const std::string& v) { return v == "X" || v == "Y" || v == "Z"; }
bool is_diff(const std::string& v) { return v == "dX" || v == "dY" || v == "dZ"; }

} // namespace

HomSymForm make_hom_sym_form(const MultiPoly& f) {
    if (f.is_zero()) throw precondition_error("homogeneous form is identically zero");
    for (const auto& v : f.vars())
        if (f.uses(v) && !is_coord(v) && !is_diff(v))
            throw precondition_error("homogeneous form uses unexpected variable '" + v + "'");
    MultiPoly g = f.with_vars(kHomVars);
    const auto& vars = g.vars();
    int cdeg = -1, ddeg = -1;
    for (const auto& [e, c] : g.terms()) {
        int cd = 0, dd = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (is_coord(vars[i])) cd += static_cast<int>(e[i]);
            if (is_diff(vars[i])) dd += static_cast<int>(e[i]);
        }
        if (cdeg == -1) {
            cdeg = cd;
            ddeg = dd;
        }
        if (cd != cdeg)
            throw precondition_error("form is not homogeneous in the coordinates");
        if (dd != ddeg)
            throw precondition_error("form is not homogeneous in the differentials");
    }
    if (ddeg < 1) throw precondition_error("form has no differential part");
    return HomSymForm{g, cdeg, ddeg};
}

MultiPoly euler_contraction(const HomSymForm& w) {
    return MultiPoly::variable("X") * w.form.derivative("dX") +
           MultiPoly::variable("Y") * w.form.derivative("dY") +
           MultiPoly::variable("Z") * w.form.derivative("dZ");
}

Chart chart_from_name(const std::string& name) {
    if (name == "z" || name == "Z") return Chart::Z;
    if (name == "x" || name == "X") return Chart::X;
    if (name == "y" || name == "Y") return Chart::Y;
    throw precondition_error("unknown chart '" + name + "' (expected z, x, or y)");
}

std::string chart_name(Chart c) {
    switch (c) {
    case Chart::Z: return "z";
    case Chart::X: return "x";
    default: return "y";
    }
}

std::pair<std::string, std::string> chart_vars(Chart c) {
    switch (c) {
    case Chart::Z: return {"x", "y"};
    case Chart::X: return {"u", "v"};
    default: return {"s", "t"};
    }
}

ChartWeb restrict_chart(const HomSymForm& w, Chart chart) {
    auto [cu, cv] = chart_vars(chart);
    std::map<std::string, MultiPoly> sub;
    MultiPoly U = MultiPoly::variable(cu), V = MultiPoly::variable(cv);
    MultiPoly dU = MultiPoly::variable("d" + cu), dV = MultiPoly::variable("d" + cv);
    MultiPoly zero = MultiPoly(std::vector<std::string>{});
    switch (chart) {
    case Chart::Z: // (x, y) = (X/Z, Y/Z)
        sub = {{"X", U}, {"Y", V}, {"Z", one()}, {"dX", dU}, {"dY", dV}, {"dZ", zero}};
        break;
    case Chart::X: // (u, v) = (Z/X, Y/X)
        sub = {{"X", one()}, {"Y", V}, {"Z", U}, {"dX", zero}, {"dY", dV}, {"dZ", dU}};
        break;
    case Chart::Y: // (s, t) = (X/Y, Z/Y)
        sub = {{"X", U}, {"Y", one()}, {"Z", V}, {"dX", dU}, {"dY", zero}, {"dZ", dV}};
        break;
    }
    MultiPoly restricted = w.form.substitute(sub);
    if (restricted.is_zero())
        throw precondition_error("form vanishes identically in chart " + chart_name(chart));
    ChartWeb out;
    WebForm raw = web_from_form_poly(restricted, cu, cv);
    out.normalization = normalize_web(raw);
    out.web = out.normalization.web;
    return out;
}

namespace {

// Source affine coordinates as rational functions of the target chart.
std::map<std::string, RationalFunction> transition_map(Chart from, Chart to,
                                                       const std::string& su,
                                                       const std::string& sv,
                                                       const std::string& tu,
                                                       const std::string& tv) {
    RationalFunction U = RationalFunction::variable(tu);
    RationalFunction V = RationalFunction::variable(tv);
    RationalFunction iU = U.inverse(), iV = V.inverse();
    // Charts: z ~ (X/Z, Y/Z), x ~ (Z/X, Y/X), y ~ (X/Y, Z/Y).
    if (from == Chart::Z && to == Chart::X) return {{su, iU}, {sv, V * iU}};
    if (from == Chart::X && to == Chart::Z) return {{su, iU}, {sv, V * iU}};
    if (from == Chart::Z && to == Chart::Y) return {{su, U * iV}, {sv, iV}};
    if (from == Chart::Y && to == Chart::Z) return {{su, U * iV}, {sv, iV}};
    if (from == Chart::X && to == Chart::Y) return {{su, V * iU}, {sv, iU}};
    if (from == Chart::Y && to == Chart::X) return {{su, iV}, {sv, U * iV}};
    throw std::logic_error("transition_map: identical charts");
}

} // namespace

ChartWeb chart_transition(const WebForm& w, Chart from, Chart to) {
    auto [su, sv] = chart_vars(from);
    if (w.x != su || w.y != sv)
        throw precondition_error("web is written in (" + w.x + ", " + w.y +
                                 ") but chart " + chart_name(from) + " uses (" + su + ", " + sv + ")");
    if (from == to) {
        ChartWeb out;
        out.normalization = normalize_web(w);
        out.web = out.normalization.web;
        return out;
    }
    auto [tu, tv] = chart_vars(to);
    std::map<std::string, RationalFunction> coords = transition_map(from, to, su, sv, tu, tv);
    // Differentials follow by the chain rule.
    std::map<std::string, RationalFunction> sub = coords;
    RationalFunction dU = RationalFunction::variable("d" + tu);
    RationalFunction dV = RationalFunction::variable("d" + tv);
    for (const auto& [var, img] : coords)
        sub["d" + var] = img.derivative(tu) * dU + img.derivative(tv) * dV;
    RationalFunction moved = substitute(w.form_poly(), sub);
    if (moved.is_zero())
        throw precondition_error("web form vanishes in chart " + chart_name(to) +
                                 "; it is carried by the removed line");
    ChartWeb out;
    WebForm raw = web_from_form_poly(moved.num(), tu, tv);
    out.normalization = normalize_web(raw);
    out.web = out.normalization.web;
    return out;
}

FamilyResultant hom_family_resultant(const MultiPoly& G, const std::string& param) {
    if (G.degree(param) < 1)
        throw precondition_error("family does not involve the parameter " + param);
    for (const auto& v : G.vars())
        if (G.uses(v) && v != param && !is_coord(v))
            throw precondition_error("family uses unexpected variable '" + v + "'");
    // Every t-coefficient must be homogeneous of one common coordinate degree.
    int deg = -1;
    for (int k = 0; k <= G.degree(param); ++k) {
        MultiPoly c = G.coeff_of(param, static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        const auto& vars = c.vars();
        for (const auto& [e, coef] : c.terms()) {
            int d = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (is_coord(vars[i])) d += static_cast<int>(e[i]);
            if (deg == -1) deg = d;
            if (d != deg)
                throw precondition_error(
                    "family coefficients are not homogeneous of one degree in (X, Y, Z)");
        }
    }
    if (deg < 1) throw precondition_error("family is constant in the coordinates");

    MultiPoly dG = MultiPoly::variable("dX") * G.derivative("X") +
                   MultiPoly::variable("dY") * G.derivative("Y") +
                   MultiPoly::variable("dZ") * G.derivative("Z");
    FamilyResultant out;
    out.raw = resultant(G, dG, param);
    if (out.raw.is_zero())
        throw precondition_error("family resultant vanishes identically");
    out.removed_content = one();
    out.removed_repeated = one();

    MultiPoly F = out.raw;
    // Coordinate-only content.
    MultiPoly c = F;
    for (const auto& v : {"dX", "dY", "dZ"}) {
        MultiPoly acc(F.vars());
        for (int k = 0; k <= F.degree(v); ++k) {
            MultiPoly ck = c.coeff_of(v, static_cast<unsigned>(k));
            if (ck.is_zero()) continue;
            acc = acc.is_zero() ? ck : gcd(acc, ck);
        }
        c = acc;
    }
    if (!c.is_unit() && !c.is_zero()) {
        F = divide_exact(F, c);
        out.removed_content = c.monic();
    }
    MultiPoly rep = gcd(gcd(F, F.derivative("dX")), gcd(F.derivative("dY"), F.derivative("dZ")));
    if (!rep.is_unit()) {
        F = divide_exact(F, rep);
        out.removed_repeated = rep.monic();
    }
    out.form = make_hom_sym_form(F.monic());
    out.descends = euler_contraction(out.form).is_zero();
    return out;
}

DualWeb dual_web(const MultiPoly& G) {
    if (G.is_zero() || G.is_constant()) throw precondition_error("curve polynomial is constant");
    for (const auto& v : G.vars())
        if (G.uses(v) && v != "q0" && v != "q1" && v != "q2")
            throw precondition_error("dual curve must be written in q0, q1, q2");
    int deg = -1;
    for (const auto& [e, c] : G.terms()) {
        int d = 0;
        for (unsigned k : e) d += static_cast<int>(k);
        if (deg == -1) deg = d;
        if (d != deg) throw precondition_error("curve polynomial is not homogeneous");
    }
    MultiPoly sf = squarefree_part(G);
    if (!equal_up_to_unit(sf, G))
        throw precondition_error("curve polynomial is not reduced (squarefree part " + sf.str() +
                                 ")");
    MultiPoly p = MultiPoly::variable("p");
    MultiPoly xpy = MultiPoly::variable("x") * p - MultiPoly::variable("y");
    MultiPoly F = G.substitute({{"q0", -p}, {"q1", one()}, {"q2", xpy}});
    if (F.is_zero() || F.degree("p") < 1)
        throw precondition_error("dual web degenerates in the (x, y) chart");
    DualWeb out;
    SurfaceF raw{F.with_vars({"x", "y", "p"}), F.degree("p")};
    out.normalization = normalize_web(surface_to_web(raw));
    out.surface = web_to_surface(out.normalization.web);
    return out;
}

WebDegreeResult web_degree(const SurfaceF& s, int trials, unsigned long seed) {
    if (trials < 1) throw precondition_error("need at least one trial");
    WebDegreeResult out;
    out.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-9, 9);
    for (int k = 0; k < trials; ++k) {
        GaussianRational m(mpq_class(small(rng)), mpq_class(small(rng)));
        GaussianRational c(mpq_class(small(rng)), mpq_class(small(rng)));
        // Tangency points of the line y = m x + c: roots of F(x, m x + c, m).
        MultiPoly mx = MultiPoly::constant(m) * MultiPoly::variable("x") + MultiPoly::constant(c);
        MultiPoly U = s.F.substitute({{"y", mx}, {"p", MultiPoly::constant(m)}});
        if (U.is_zero()) {
            ++out.degenerate;
            out.counts.push_back(-1);
            continue;
        }
        int count = std::max(U.degree("x"), 0);
        out.counts.push_back(count);
        if (count > out.degree) {
            out.degree = count;
            out.achieved = 1;
        } else if (count == out.degree) {
            ++out.achieved;
        }
    }
    if (out.degenerate == trials)
        throw precondition_error("all sampled lines were degenerate for the web");
    return out;
}

} // namespace holoweb
