#include "holoweb/foliation.hpp"

namespace holoweb {

namespace {

MultiPoly one() { return MultiPoly::constant(GaussianRational(1)); }

} // namespace

FirstIntegralVerdict first_integral_check(const RationalFunction& f, const PlanarForm& form) {
    if (f.num().total_degree() <= 0 && f.den().total_degree() <= 0)
        throw precondition_error("a constant is a first integral of everything; refusing the vacuous check");
    RationalFunction w = f.derivative(form.u) * RationalFunction(form.b) -
                         f.derivative(form.v) * RationalFunction(form.a);
    FirstIntegralVerdict out;
    out.first_integral = w.is_zero();
    if (!out.first_integral) out.witness = w.num();
    return out;
}

GaussianRational cs_index(const PlanarForm& form, const GaussianRational& u0) {
    MultiPoly v = MultiPoly::variable(form.v);
    MultiPoly a_tilde;
    if (!form.a.is_zero()) {
        if (!divides(v, form.a, &a_tilde))
            throw precondition_error("curve {" + form.v + " = 0} is not invariant: " + form.v +
                                     " does not divide " + form.a.str());
    } else {
        a_tilde = MultiPoly(form.a.vars());
    }
    MultiPoly zero_sub = MultiPoly(std::vector<std::string>{});
    MultiPoly a0 = a_tilde.substitute({{form.v, zero_sub}});
    MultiPoly b0 = form.b.substitute({{form.v, zero_sub}});
    if (b0.is_zero())
        throw precondition_error("form is degenerate along {" + form.v +
                                 " = 0}: d" + form.v + " coefficient vanishes on the curve");
    if (a0.is_zero()) return GaussianRational(0);
    return -residue_at(RationalFunction(a0, b0), form.u, u0);
}

ProjOneForm homogenize_affine_form(const PlanarForm& form) {
    if (form.a.is_zero() && form.b.is_zero())
        throw precondition_error("planar form is identically zero");
    int m = std::max(form.a.total_degree(), form.b.total_degree());
    MultiPoly X = MultiPoly::variable("X"), Y = MultiPoly::variable("Y"), Z = MultiPoly::variable("Z");
    RationalFunction x = RationalFunction(X, Z), y = RationalFunction(Y, Z);
    std::map<std::string, RationalFunction> sub{{form.u, x}, {form.v, y}};
    RationalFunction zm = RationalFunction(Z).pow(m);
    MultiPoly ah = (substitute(form.a, sub) * zm).as_poly();
    MultiPoly bh = (substitute(form.b, sub) * zm).as_poly();
    ProjOneForm w;
    w.A = Z * ah;
    w.B = Z * bh;
    w.C = -(X * ah + Y * bh);
    MultiPoly g = gcd(gcd(w.A, w.B), w.C);
    if (!g.is_unit()) {
        w.A = divide_exact(w.A, g);
        w.B = divide_exact(w.B, g);
        w.C = divide_exact(w.C, g);
    }
    return w;
}

namespace {

void check_homogeneous(const MultiPoly& f, int expect, const char* what) {
    if (f.is_zero()) return;
    for (const auto& [e, c] : f.terms()) {
        int d = 0;
        for (unsigned k : e) d += static_cast<int>(k);
        if (d != expect)
            throw precondition_error(std::string(what) + " is not homogeneous of degree " +
                                     std::to_string(expect));
    }
}

} // namespace

void validate_proj_one_form(const ProjOneForm& w) {
    for (const MultiPoly* f : {&w.A, &w.B, &w.C})
        for (const auto& v : f->vars())
            if (f->uses(v) && v != "X" && v != "Y" && v != "Z")
                throw precondition_error("homogeneous form uses unexpected variable '" + v + "'");
    int deg = std::max({w.A.total_degree(), w.B.total_degree(), w.C.total_degree()});
    if (deg < 0) throw precondition_error("homogeneous form is identically zero");
    check_homogeneous(w.A, deg, "dX coefficient");
    check_homogeneous(w.B, deg, "dY coefficient");
    check_homogeneous(w.C, deg, "dZ coefficient");
    MultiPoly euler = MultiPoly::variable("X") * w.A + MultiPoly::variable("Y") * w.B +
                      MultiPoly::variable("Z") * w.C;
    if (!euler.is_zero())
        throw precondition_error("Euler identity fails: X A + Y B + Z C = " + euler.str());
    MultiPoly g = gcd(gcd(w.A, w.B), w.C);
    if (!g.is_unit())
        throw precondition_error("form is not saturated: common factor " + g.str());
}

CSSumResult cs_sum_line(const ProjOneForm& w) {
    validate_proj_one_form(w);
    CSSumResult out;
    out.sum = GaussianRational(0);
    MultiPoly zero_c = MultiPoly(std::vector<std::string>{});

    // Chart z = {Z = 1}: the line {Y = 0} minus the point [1:0:0].
    MultiPoly a = w.A.substitute({{"Z", one()}});
    MultiPoly b = w.B.substitute({{"Z", one()}});
    std::map<std::string, MultiPoly> to_xy{{"X", MultiPoly::variable("x")},
                                           {"Y", MultiPoly::variable("y")}};
    a = a.substitute(to_xy);
    b = b.substitute(to_xy);
    MultiPoly g = a.is_zero() && b.is_zero() ? one() : gcd(a, b);
    if (!g.is_unit()) {
        a = divide_exact(a, g);
        b = divide_exact(b, g);
        out.notes.push_back("chart form saturated by " + g.str());
    }
    if (a.is_zero() && b.is_zero())
        throw precondition_error("form vanishes identically in the affine chart");
    PlanarForm chart_form{"x", "y", a, b};
    MultiPoly y_poly = MultiPoly::variable("y");
    if (!a.is_zero() && !divides(y_poly, a))
        throw precondition_error("line {Y = 0} is not invariant: y does not divide " + a.str());
    MultiPoly beta = b.substitute({{"y", zero_c}});
    if (beta.is_zero())
        throw precondition_error("form is degenerate along the line: b(x, 0) = 0");
    auto [roots, leftover] = exact_roots(beta, "x");
    if (!leftover.is_constant())
        throw precondition_error("singular points on the line are not representable over Q(i): "
                                 "unfactored part " + leftover.str());
    for (const auto& r : roots) {
        GaussianRational idx = cs_index(chart_form, r);
        out.entries.push_back({"z", r, idx});
        out.sum += idx;
    }

    // The remaining point [1:0:0], in the chart {X = 1} with (u, v) = (Y/X, Z/X).
    MultiPoly bu = w.B.substitute({{"X", one()}});
    MultiPoly cv = w.C.substitute({{"X", one()}});
    std::map<std::string, MultiPoly> to_uv{{"Y", MultiPoly::variable("u")},
                                           {"Z", MultiPoly::variable("v")}};
    bu = bu.substitute(to_uv); // du coefficient
    cv = cv.substitute(to_uv); // dv coefficient
    MultiPoly g2 = bu.is_zero() && cv.is_zero() ? one() : gcd(bu, cv);
    if (!g2.is_unit()) {
        bu = divide_exact(bu, g2);
        cv = divide_exact(cv, g2);
    }
    std::map<std::string, GaussianRational> origin{{"u", GaussianRational(0)},
                                                   {"v", GaussianRational(0)}};
    bool singular = bu.eval(origin).is_zero() && cv.eval(origin).is_zero();
    if (singular) {
        // The line is {u = 0} here; swap the roles so cs_index sees the curve
        // as its second coordinate.
        PlanarForm at_infinity{"v", "u", cv, bu};
        GaussianRational idx = cs_index(at_infinity, GaussianRational(0));
        out.entries.push_back({"x", GaussianRational(0), idx});
        out.sum += idx;
    } else {
        out.notes.push_back("[1:0:0] is a regular point of the foliation");
    }
    return out;
}

WebIntegralVerdict web_first_integral_check(const MultiPoly& P, const std::string& param,
                                            const SurfaceF& s,
                                            const std::vector<MultiPoly>& factors) {
    verify_factorization(s.F, factors);
    CurveFamilyWeb fam = web_from_curve_family(P, param);
    WebIntegralVerdict out;
    out.extraneous = one();
    if (!fam.surface) {
        out.ok = false;
        out.notes.push_back("family eliminates to a p-free polynomial (" + fam.raw.str() +
                            "); it envelopes no web");
        return out;
    }
    out.eliminated = fam.surface->F;
    out.ok = true;
    if (!fam.normalization.removed_content.is_unit())
        out.notes.push_back("elimination carried the p-free factor " +
                            fam.normalization.removed_content.str());
    if (!fam.normalization.removed_repeated.is_unit())
        out.notes.push_back("elimination carried the repeated factor " +
                            fam.normalization.removed_repeated.str());
    MultiPoly rest = out.eliminated;
    for (const auto& f : factors) {
        MultiPoly cof;
        if (!divides(f, rest, &cof)) {
            out.ok = false;
            out.notes.push_back("factor " + f.str() + " does not divide the eliminated web");
            continue;
        }
        rest = cof;
    }
    if (out.ok) {
        out.extraneous = rest.monic();
        if (!rest.is_constant())
            out.notes.push_back("family envelopes extra branches: " + out.extraneous.str());
    }
    return out;
}

} // namespace holoweb
