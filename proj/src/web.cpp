#include "holoweb/web.hpp"

#include <algorithm>
#include <stdexcept>

namespace holoweb {

namespace {

const std::string kP = "p";

MultiPoly one() { return MultiPoly::constant(GaussianRational(1)); }

// Wraps a polynomial factor for printing inside a differential form.
std::string form_part(const MultiPoly& c, const std::string& dvar) {
    if (c.is_zero()) return "";
    if (c.is_unit()) {
        GaussianRational u = c.constant_value();
        if (u.is_one()) return "d" + dvar;
        if ((-u).is_one()) return "-d" + dvar;
    }
    std::string cs = c.str();
    if (c.term_count() > 1) return "(" + cs + ")*d" + dvar;
    return cs + "*d" + dvar;
}

std::string join_parts(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (out.empty()) {
            out = p;
        } else if (p[0] == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

MultiPoly WebForm::form_poly() const {
    int d = degree();
    MultiPoly dx = MultiPoly::variable("d" + x);
    MultiPoly dy = MultiPoly::variable("d" + y);
    MultiPoly acc;
    for (int j = 0; j <= d; ++j)
        acc += coeffs[static_cast<std::size_t>(j)] *
               dx.pow(static_cast<unsigned>(d - j)) * dy.pow(static_cast<unsigned>(j));
    return acc;
}

std::string WebForm::str() const {
    int d = degree();
    std::vector<std::string> parts;
    for (int j = 0; j <= d; ++j) {
        const MultiPoly& c = coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        std::string mono;
        if (d - j > 0) mono += "d" + x + (d - j > 1 ? "^" + std::to_string(d - j) : "");
        if (j > 0) {
            if (!mono.empty()) mono += "*";
            mono += "d" + y + (j > 1 ? "^" + std::to_string(j) : "");
        }
        if (c.is_unit()) {
            GaussianRational u = c.constant_value();
            if (u.is_one()) {
                parts.push_back(mono);
                continue;
            }
            if ((-u).is_one()) {
                parts.push_back("-" + mono);
                continue;
            }
        }
        std::string cs = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
        parts.push_back(cs + "*" + mono);
    }
    return join_parts(parts);
}

std::string PlanarForm::str() const {
    return join_parts({form_part(a, u), form_part(b, v)});
}

WebForm web_from_form_poly(const MultiPoly& form, const std::string& x, const std::string& y) {
    if (form.is_zero()) throw precondition_error("web form is identically zero");
    const std::string dx = "d" + x, dy = "d" + y;
    for (const auto& v : form.vars())
        if (form.uses(v) && v != x && v != y && v != dx && v != dy)
            throw precondition_error("web form uses unexpected variable '" + v + "'");
    // Every term must have the same combined degree in the differentials.
    int d = -1;
    MultiPoly f = form.with_vars({x, y, dx, dy});
    std::size_t idx = 0, idy = 0;
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (f.vars()[i] == dx) idx = i;
        if (f.vars()[i] == dy) idy = i;
    }
    for (const auto& [e, c] : f.terms()) {
        int k = static_cast<int>(e[idx] + e[idy]);
        if (d == -1) d = k;
        if (k != d)
            throw precondition_error("web form is not homogeneous in d" + x + ", d" + y);
    }
    if (d < 1) throw precondition_error("web form has no differential part");
    WebForm w;
    w.x = x;
    w.y = y;
    for (int j = 0; j <= d; ++j) {
        MultiPoly c = f.coeff_of(dx, static_cast<unsigned>(d - j));
        c = c.coeff_of(dy, static_cast<unsigned>(j));
        w.coeffs.push_back(c);
    }
    return w;
}

SurfaceF web_to_surface(const WebForm& w) {
    MultiPoly p = MultiPoly::variable(kP);
    MultiPoly F;
    for (int j = 0; j <= w.degree(); ++j)
        F += w.coeffs[static_cast<std::size_t>(j)] * p.pow(static_cast<unsigned>(j));
    F = F.with_vars({w.x, w.y, kP});
    int d = F.degree(kP);
    if (F.is_zero() || d < 1)
        throw precondition_error("web has no surface model in the p-chart");
    return SurfaceF{F, d};
}

WebForm surface_to_web(const SurfaceF& s) {
    WebForm w;
    for (int j = 0; j <= s.d; ++j)
        w.coeffs.push_back(s.F.coeff_of(kP, static_cast<unsigned>(j)));
    return w;
}

SurfaceF make_surface(const MultiPoly& F) {
    int d = F.degree(kP);
    if (F.is_zero() || d < 1)
        throw precondition_error("surface polynomial must have positive degree in p");
    MultiPoly rep = gcd(F, F.derivative(kP));
    if (!rep.is_unit())
        throw precondition_error("surface polynomial is not squarefree in p (repeated factor " +
                                 rep.str() + ")");
    MultiPoly c = content_in(F, kP);
    if (!c.is_unit())
        throw precondition_error("surface polynomial has coefficient content " + c.str());
    return SurfaceF{F.with_vars({"x", "y", kP}), d};
}

NormalizedWeb normalize_web(const WebForm& w) {
    NormalizedWeb out;
    out.removed_content = one();
    out.removed_repeated = one();
    MultiPoly F;
    MultiPoly p = MultiPoly::variable(kP);
    for (int j = 0; j <= w.degree(); ++j)
        F += w.coeffs[static_cast<std::size_t>(j)] * p.pow(static_cast<unsigned>(j));
    if (F.is_zero()) throw precondition_error("web form is identically zero");
    if (F.degree(kP) < 1)
        throw precondition_error("web is carried entirely by the vertical pencil in this chart");
    if (w.degree() > F.degree(kP))
        out.warnings.push_back("top coefficient vanishes identically; the vertical branch is "
                               "not visible in the p-chart");

    MultiPoly c = content_in(F, kP);
    if (!c.is_unit()) {
        F = divide_exact(F, c);
        out.removed_content = c;
    }
    MultiPoly rep = gcd(F, F.derivative(kP));
    if (!rep.is_unit()) {
        F = divide_exact(F, rep);
        out.removed_repeated = rep;
        out.warnings.push_back("repeated factor removed: " + rep.str());
    }
    F = F.monic().with_vars({w.x, w.y, kP});
    SurfaceF s{F, F.degree(kP)};
    out.web = surface_to_web(s);
    out.web.x = w.x;
    out.web.y = w.y;
    return out;
}

ContactField contact_field(const SurfaceF& s) {
    MultiPoly Fp = s.F.derivative(kP);
    MultiPoly p = MultiPoly::variable(kP);
    return ContactField{Fp, p * Fp, -(s.F.derivative("x") + p * s.F.derivative("y"))};
}

std::vector<GraphChart> graph_charts(const SurfaceF& s) {
    std::vector<GraphChart> out;
    struct Cand {
        const char* solved;
        const char* u;
        const char* v;
    };
    // Preference order: eliminate y, then x, then p.
    for (const Cand& c : {Cand{"y", "x", "p"}, Cand{"x", "y", "p"}, Cand{"p", "x", "y"}}) {
        if (s.F.degree(c.solved) != 1) continue;
        GraphChart g;
        g.solved = c.solved;
        g.u = c.u;
        g.v = c.v;
        g.A = s.F.coeff_of(c.solved, 1);
        g.B = s.F.coeff_of(c.solved, 0);
        out.push_back(std::move(g));
    }
    return out;
}

PlanarForm planar_restriction_in(const SurfaceF& s, const GraphChart& chart) {
    if (s.F.degree(chart.solved) != 1)
        throw precondition_error("surface is not linear in " + chart.solved);
    const MultiPoly& A = chart.A;
    const MultiPoly& B = chart.B;
    MultiPoly p = MultiPoly::variable(kP);
    MultiPoly a_raw, b_raw;
    if (chart.solved == "y") {
        // y = -B/A over (x, p): restrict dy - p dx and clear A^2.
        a_raw = -(B.derivative("x") * A - B * A.derivative("x")) - p * A * A;
        b_raw = -(B.derivative(kP) * A - B * A.derivative(kP));
    } else if (chart.solved == "x") {
        a_raw = A * A + p * (B.derivative("y") * A - B * A.derivative("y"));
        b_raw = p * (B.derivative(kP) * A - B * A.derivative(kP));
    } else if (chart.solved == "p") {
        // p = -B/A over (x, y): dy - p dx becomes (B dx + A dy)/A.
        a_raw = B;
        b_raw = A;
    } else {
        throw std::logic_error("planar_restriction_in: unknown chart");
    }
    if (a_raw.is_zero() && b_raw.is_zero())
        throw precondition_error("restriction of the contact form vanishes identically");
    MultiPoly g = gcd(a_raw, b_raw);
    PlanarForm f;
    f.u = chart.u;
    f.v = chart.v;
    f.a = g.is_unit() ? a_raw : divide_exact(a_raw, g);
    f.b = g.is_unit() ? b_raw : divide_exact(b_raw, g);
    GaussianRational lead = f.a.is_zero() ? f.b.lead_coeff() : f.a.lead_coeff();
    GaussianRational inv = lead.inverse();
    f.a = inv * f.a;
    f.b = inv * f.b;
    return f;
}

PlanarForm planar_restriction(const SurfaceF& s) {
    auto charts = graph_charts(s);
    if (charts.empty())
        throw precondition_error(
            "surface is not linear in any coordinate; no graph chart available");
    return planar_restriction_in(s, charts.front());
}

CriminantResult criminant(const SurfaceF& s) {
    CriminantResult out;
    MultiPoly Fp = s.F.derivative(kP);
    out.generators = {s.F, Fp};
    if (Fp.is_unit()) {
        out.empty = true;
        return out;
    }
    // Triangular form: solve F_p = 0 for a coordinate it is linear in with a
    // constant leading coefficient.
    for (const std::string& var : {std::string("y"), std::string("x"), std::string(kP)}) {
        if (Fp.degree(var) != 1) continue;
        MultiPoly A = Fp.coeff_of(var, 1);
        if (!A.is_unit()) continue;
        GaussianRational inv = A.constant_value().inverse();
        MultiPoly expr = (-inv) * Fp.coeff_of(var, 0); // var = expr on {F_p = 0}
        out.solved_var = var;
        out.relation = MultiPoly::variable(var) - expr;
        MultiPoly elim = s.F.substitute({{var, expr}});
        if (elim.is_zero())
            throw precondition_error("F vanishes on {F_p = 0}; surface is not squarefree in p");
        if (elim.is_constant()) {
            out.empty = true;
            out.eliminated = elim;
            return out;
        }
        out.eliminated = elim.monic();

        auto [mono, cofactor] = split_monomial_factors(out.eliminated);
        std::vector<MultiPoly> factors;
        for (const auto& [mv, me] : mono) factors.push_back(MultiPoly::variable(mv));
        if (!cofactor.is_constant()) factors.push_back(squarefree_part(cofactor));
        for (const auto& f : factors) {
            CriminantComponent comp;
            comp.factor = f.with_vars({"x", "y", kP});
            comp.relation = poly_remainder(out.relation, comp.factor);
            out.components.push_back(std::move(comp));
        }
        return out;
    }
    return out; // generators only; no triangular description found
}

DiscriminantCurve discriminant_curve(const SurfaceF& s) {
    DiscriminantCurve out;
    MultiPoly Fp = s.F.derivative(kP);
    out.resultant_raw = resultant(s.F, Fp, kP);
    out.lc_factor = one();
    if (out.resultant_raw.is_zero())
        throw precondition_error("Res_p(F, F_p) vanishes identically; F is not squarefree in p");
    if (out.resultant_raw.is_constant()) {
        out.caustic = one();
        out.notes.push_back("criminant projects to no curve");
        return out;
    }
    MultiPoly S = squarefree_part(out.resultant_raw);
    MultiPoly L = s.F.lead_coeff_in(kP);
    MultiPoly spurious_candidate = L.is_constant() ? one() : gcd(S, L);
    if (spurious_candidate.is_unit()) {
        out.caustic = S;
        return out;
    }

    // Zeros of lc_p(F) enter the resultant whether or not the web really
    // folds there (the top branch escapes to p = infinity). Decide by
    // sampling exact points of the candidate locus away from the rest of the
    // caustic and checking for a finite common p-root.
    MultiPoly main_part = divide_exact(S, spurious_candidate);
    std::string sample_var, root_var;
    if (spurious_candidate.degree("y") >= 1) {
        sample_var = "x";
        root_var = "y";
    } else {
        sample_var = "y";
        root_var = "x";
    }
    int genuine_hits = 0, spurious_hits = 0, points = 0;
    std::vector<std::string> evidence;
    for (long k = 0; k < 24 && points < 3; ++k) {
        GaussianRational c = (k % 2 == 0) ? GaussianRational(k / 2)
                                          : GaussianRational(mpq_class(0), mpq_class((k + 1) / 2));
        MultiPoly slice = spurious_candidate.substitute({{sample_var, MultiPoly::constant(c)}});
        if (slice.is_constant()) continue;
        auto [roots, leftover] = exact_roots(slice, root_var);
        (void)leftover;
        for (const auto& r : roots) {
            std::map<std::string, GaussianRational> q;
            q[sample_var] = c;
            q[root_var] = r;
            if (!main_part.is_constant() && main_part.eval(q).is_zero()) continue;
            MultiPoly fq = s.F.substitute({{sample_var, MultiPoly::constant(q[sample_var])},
                                           {root_var, MultiPoly::constant(q[root_var])}});
            MultiPoly fpq = Fp.substitute({{sample_var, MultiPoly::constant(q[sample_var])},
                                           {root_var, MultiPoly::constant(q[root_var])}});
            MultiPoly g = gcd(fq, fpq);
            ++points;
            bool finite_contact = !g.is_unit(); // includes the all-zero fibre
            if (finite_contact)
                ++genuine_hits;
            else
                ++spurious_hits;
            evidence.push_back("at (" + sample_var + "," + root_var + ") = (" + q[sample_var].str() +
                               "," + q[root_var].str() + ") gcd_p(F, F_p) = " + g.str());
            if (points >= 3) break;
        }
    }
    if (points < 3 || (genuine_hits > 0 && spurious_hits > 0)) {
        out.caustic = S;
        out.notes.push_back("leading-coefficient factor " + spurious_candidate.str() +
                            " kept in the caustic; sampling was inconclusive");
    } else if (genuine_hits > 0) {
        out.caustic = S;
        out.notes.push_back("leading-coefficient factor " + spurious_candidate.str() +
                            " carries genuine contact points; kept");
    } else {
        out.caustic = main_part.monic();
        out.lc_factor = spurious_candidate.monic();
        out.notes.push_back("leading-coefficient factor " + spurious_candidate.str() +
                            " has no finite contact above it; split off");
    }
    for (auto& e : evidence) out.notes.push_back(std::move(e));
    if (out.caustic.is_constant() && !out.caustic.is_zero()) out.caustic = one();
    out.caustic = out.caustic.monic();
    return out;
}

SingularLocus foliation_singular_locus(const PlanarForm& f) {
    SingularLocus out;
    out.removed_common = one();
    if (f.a.is_zero() && f.b.is_zero())
        throw precondition_error("planar form is identically zero");
    MultiPoly g = gcd(f.a, f.b);
    out.a = f.a;
    out.b = f.b;
    if (!g.is_unit()) {
        out.a = divide_exact(f.a, g);
        out.b = divide_exact(f.b, g);
        out.removed_common = g;
    }
    out.empty = affine_locus_empty(out.a, out.b, f.u, f.v);
    out.finite = true;
    return out;
}

bool affine_locus_empty(const MultiPoly& a, const MultiPoly& b, const std::string& u,
                        const std::string& v) {
    if (a.is_zero() && b.is_zero()) return false;
    if (a.is_unit() || b.is_unit()) return true;
    if (a.is_zero() || b.is_zero()) return false; // zero set of one nonconstant polynomial
    MultiPoly g = gcd(a, b);
    if (!g.is_unit()) return false; // a whole common curve
    for (const auto& w : a.vars())
        if (a.uses(w) && w != u && w != v)
            throw std::logic_error("affine_locus_empty: stray variable " + w);
    for (const auto& w : b.vars())
        if (b.uses(w) && w != u && w != v)
            throw std::logic_error("affine_locus_empty: stray variable " + w);

    // Shear u -> u + c v until both leading v-coefficients are (nonzero)
    // constants; then the resultant in v has no leading-coefficient caveat
    // and the locus is empty iff that resultant is constant.
    auto top_form_value = [&](const MultiPoly& f, const GaussianRational& c) {
        int d = f.total_degree();
        GaussianRational acc(0);
        for (const auto& [e, coef] : f.terms()) {
            int td = 0;
            for (unsigned k : e) td += static_cast<int>(k);
            if (td != d) continue;
            GaussianRational t = coef;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                GaussianRational base = (f.vars()[i] == u) ? c : GaussianRational(1);
                if (f.vars()[i] != u && f.vars()[i] != v)
                    throw std::logic_error("affine_locus_empty: stray variable");
                for (unsigned kk = 0; kk < e[i]; ++kk) t *= base;
            }
            acc += t;
        }
        return acc;
    };
    long c = 0;
    while (top_form_value(a, GaussianRational(c)).is_zero() ||
           top_form_value(b, GaussianRational(c)).is_zero())
        ++c;
    MultiPoly shear = MultiPoly::variable(u) +
                      GaussianRational(c) * MultiPoly::variable(v);
    MultiPoly as = a.substitute({{u, shear}});
    MultiPoly bs = b.substitute({{u, shear}});
    MultiPoly res = resultant(as, bs, v);
    if (res.is_zero()) throw std::logic_error("affine_locus_empty: unexpected zero resultant");
    return res.is_constant();
}

DicriticalVerdict dicritical(const SurfaceF& s) {
    auto charts = graph_charts(s);
    if (charts.empty())
        throw precondition_error(
            "surface is not linear in any coordinate; no graph chart available");
    DicriticalVerdict out;
    out.chart = charts.front();
    out.restriction = planar_restriction_in(s, out.chart);
    out.locus = foliation_singular_locus(out.restriction);
    out.dicritical = out.locus.empty;
    return out;
}

InvarianceVerdict invariant_curve_check(const PlanarForm& f, const MultiPoly& g) {
    if (g.is_constant()) throw precondition_error("invariant-curve check needs a nonconstant curve");
    InvarianceVerdict out;
    out.derivative = f.b * g.derivative(f.u) - f.a * g.derivative(f.v);
    if (out.derivative.is_zero()) {
        out.invariant = true;
        out.witness = MultiPoly(g.vars());
        return out;
    }
    MultiPoly cof;
    if (divides(g, out.derivative, &cof)) {
        out.invariant = true;
        out.witness = cof;
    } else {
        out.invariant = false;
        out.witness = poly_remainder(out.derivative, g);
    }
    return out;
}

std::vector<InvarianceEntry> criminant_invariance(const SurfaceF& s) {
    CriminantResult cr = criminant(s);
    std::vector<InvarianceEntry> out;
    if (cr.empty) return out;
    if (cr.components.empty())
        throw precondition_error("criminant has no triangular component description");
    auto charts = graph_charts(s);
    for (const auto& comp : cr.components) {
        InvarianceEntry entry;
        entry.component = {comp.factor, comp.relation};
        bool placed = false;
        for (const auto& chart : charts) {
            if (chart.A.is_zero()) continue;
            RationalFunction expr =
                RationalFunction(-chart.B, chart.A); // solved coordinate on the graph
            std::map<std::string, RationalFunction> sub{{chart.solved, expr}};
            std::vector<MultiPoly> images;
            bool misses = false;
            for (const auto& gen : entry.component) {
                if (gen.is_zero()) continue;
                MultiPoly num = substitute(gen, sub).num();
                if (num.is_zero()) continue;
                if (num.is_constant()) {
                    misses = true; // a generator is a nonzero constant on the chart
                    break;
                }
                images.push_back(num);
            }
            if (misses || images.empty()) continue;
            MultiPoly curve = images.front();
            for (std::size_t i = 1; i < images.size(); ++i) curve = gcd(curve, images[i]);
            if (curve.is_constant()) continue; // component collapses to a point here
            PlanarForm rest;
            try {
                rest = planar_restriction_in(s, chart);
            } catch (const precondition_error&) {
                continue;
            }
            entry.curve = squarefree_part(curve).monic();
            entry.chart_solved = chart.solved;
            entry.chart_u = chart.u;
            entry.chart_v = chart.v;
            InvarianceVerdict verdict = invariant_curve_check(rest, entry.curve);
            entry.invariant = verdict.invariant;
            entry.derivative = verdict.derivative;
            entry.witness = verdict.witness;
            placed = true;
            break;
        }
        if (!placed) {
            entry.skipped = true;
            entry.note = "component is not a curve in any available graph chart";
        }
        out.push_back(std::move(entry));
    }
    return out;
}

void verify_factorization(const MultiPoly& F, const std::vector<MultiPoly>& factors) {
    if (factors.empty()) throw precondition_error("no factors given");
    MultiPoly prod = one();
    for (const auto& f : factors) {
        if (f.is_constant()) throw precondition_error("constant factor in factorization");
        prod = prod * f;
    }
    if (!equal_up_to_unit(prod, F))
        throw precondition_error("factors do not multiply to the surface polynomial (product " +
                                 prod.str() + ")");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!gcd(factors[i], factors[j]).is_unit())
                throw precondition_error("factors " + factors[i].str() + " and " +
                                         factors[j].str() + " share a common divisor");
}

CurveFamilyWeb web_from_curve_family(const MultiPoly& P, const std::string& param) {
    if (P.degree(param) < 1)
        throw precondition_error("family polynomial does not involve the parameter " + param);
    MultiPoly tangent = P.derivative("x") + MultiPoly::variable(kP) * P.derivative("y");
    CurveFamilyWeb out;
    if (tangent.is_zero())
        throw precondition_error("family does not depend on x or y");
    out.raw = resultant(P, tangent, param);
    if (out.raw.is_zero())
        throw precondition_error("elimination degenerates: the family is not squarefree in " +
                                 param + " or is fully tangent");
    out.extraneous = one();
    if (out.raw.is_constant() || out.raw.degree(kP) < 1) {
        out.extraneous = out.raw.monic();
        return out; // no envelope web in this chart
    }
    SurfaceF raw_surface{out.raw.with_vars({"x", "y", kP}), out.raw.degree(kP)};
    out.normalization = normalize_web(surface_to_web(raw_surface));
    out.surface = web_to_surface(out.normalization.web);
    out.extraneous = divide_exact(out.raw, out.surface->F).monic();
    return out;
}

} // namespace holoweb
