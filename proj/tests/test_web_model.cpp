#include "doctest.h"

#include "holoweb/parser.hpp"
#include "holoweb/web.hpp"
#include "random_inputs.hpp"

using namespace holoweb;
using namespace holoweb::testing;

namespace {

MultiPoly P(const std::string& text, std::vector<std::string> vars) {
    return parse_poly(text, vars);
}

const std::vector<std::string> XYP{"x", "y", "p"};

// A random surface polynomial that passes make_surface: squarefree in p,
// no coefficient content, degree in p at least one.
SurfaceF rand_surface(std::mt19937& rng, unsigned pdeg) {
    for (;;) {
        MultiPoly F;
        for (unsigned j = 0; j <= pdeg; ++j)
            F += rand_poly(rng, {"x", "y"}, 2, 2) * MultiPoly::variable("p").pow(j);
        if (F.degree("p") < 1) continue;
        try {
            return make_surface(F);
        } catch (const precondition_error&) {
            continue; // content or a repeated p-factor; redraw
        }
    }
}

} // namespace

TEST_CASE("web form and surface are two views of one object") {
    std::mt19937 rng(2101);
    for (int iter = 0; iter < 30; ++iter) {
        SurfaceF s = rand_surface(rng, 1 + iter % 3);
        WebForm w = surface_to_web(s);
        CHECK(web_to_surface(w).F == s.F);
        CHECK(web_to_surface(w).d == s.d);
        // The form polynomial reassembles to the same coefficient list.
        WebForm w2 = web_from_form_poly(w.form_poly());
        CHECK(w2.degree() == w.degree());
        for (int j = 0; j <= w.degree(); ++j)
            CHECK(w2.coeffs[static_cast<std::size_t>(j)] == w.coeffs[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("normalization removes content and repeated factors once") {
    std::mt19937 rng(2202);
    for (int iter = 0; iter < 20; ++iter) {
        GaussianRational r = rand_rat(rng, 3);
        GaussianRational sft = rand_nonzero_rat(rng, 3);
        MultiPoly rep = P("p", XYP) - MultiPoly::constant(r);
        MultiPoly tail = P("x*p", XYP) + MultiPoly::constant(sft);
        MultiPoly content = rand_nonconstant_poly(rng, {"x", "y"}, 2, 2);
        MultiPoly raw = content * rep * rep * tail;
        if (!gcd(rep, tail).is_constant()) continue;

        WebForm w = web_from_form_poly(surface_to_web(SurfaceF{raw, raw.degree("p")}).form_poly());
        NormalizedWeb nw = normalize_web(w);
        MultiPoly Fnorm = web_to_surface(nw.web).F;
        CHECK(equal_up_to_unit(nw.removed_repeated, rep));
        CHECK(equal_up_to_unit(nw.removed_content, content));
        CHECK(equal_up_to_unit(raw, nw.removed_content * nw.removed_repeated * Fnorm));

        // Idempotence: a normalized web normalizes to itself.
        NormalizedWeb again = normalize_web(nw.web);
        CHECK(again.removed_content.is_unit());
        CHECK(again.removed_repeated.is_unit());
        CHECK(web_to_surface(again.web).F == Fnorm);
    }
}

TEST_CASE("make_surface rejects degenerate shapes") {
    CHECK_THROWS_AS(make_surface(P("x + y", XYP)), precondition_error);   // p-free
    CHECK_THROWS_AS(make_surface(P("p^2", XYP)), precondition_error);     // repeated factor
    CHECK_THROWS_AS(make_surface(P("x*p + x", XYP)), precondition_error); // content x
    CHECK_THROWS_AS(make_surface(MultiPoly()), precondition_error);
    CHECK(make_surface(P("y*p^2 + x*p", XYP)).d == 2);
}

TEST_CASE("contact field is tangent and respects the contact direction") {
    std::mt19937 rng(2303);
    for (int iter = 0; iter < 50; ++iter) {
        SurfaceF s = rand_surface(rng, 1 + iter % 3);
        ContactField v = contact_field(s);
        // Tangency to {F = 0}: v(F) = 0 identically.
        MultiPoly vF = v.x_comp * s.F.derivative("x") + v.y_comp * s.F.derivative("y") +
                       v.p_comp * s.F.derivative("p");
        CHECK(vF.is_zero());
        // The contact form dy - p dx annihilates the field.
        CHECK(v.y_comp == P("p", XYP) * v.x_comp);
    }
}

TEST_CASE("resultant of F and F_p vanishes exactly over degenerate fibres") {
    std::mt19937 rng(2404);
    int checked = 0;
    while (checked < 50) {
        MultiPoly a = rand_nonzero_poly(rng, {"x", "y"}, 1, 2);
        MultiPoly b = rand_poly(rng, {"x", "y"}, 1, 2);
        MultiPoly c = rand_poly(rng, {"x", "y"}, 1, 2);
        MultiPoly p = MultiPoly::variable("p");
        MultiPoly F = a * p.pow(2) + b * p + c;
        MultiPoly raw = resultant(F, F.derivative("p"), "p");
        if (raw.is_zero()) continue; // globally degenerate draw, redraw

        GaussianRational x0 = rand_rat(rng, 4), y0 = rand_rat(rng, 4);
        std::map<std::string, MultiPoly> at{{"x", MultiPoly::constant(x0)},
                                            {"y", MultiPoly::constant(y0)}};
        MultiPoly Fs = F.substitute(at);
        MultiPoly Fps = F.derivative("p").substitute(at);
        bool lc_drop = a.substitute(at).is_zero();
        bool shared = !Fs.is_zero() && !Fps.is_zero() && gcd(Fs, Fps).total_degree() > 0;
        bool raw_zero = raw.substitute(at).is_zero();
        CHECK(raw_zero == (lc_drop || shared || Fs.is_zero() || Fps.is_zero()));
        ++checked;
    }
}

TEST_CASE("caustic splits into genuine part and leading-coefficient part") {
    SurfaceF circles = make_surface(P("y*p^2 + x*p", XYP));
    DiscriminantCurve d = discriminant_curve(circles);
    CHECK(d.caustic == P("x", XYP));
    CHECK(d.lc_factor == P("y", XYP));
    CHECK(equal_up_to_unit(d.resultant_raw, P("x^2*y", XYP)));
    CHECK(equal_up_to_unit(squarefree_part(d.resultant_raw), d.caustic * d.lc_factor));

    SurfaceF conic = make_surface(P("x*p^2 - y*p + 1", XYP));
    DiscriminantCurve d2 = discriminant_curve(conic);
    CHECK(d2.caustic == P("y^2 - 4*x", XYP));
    CHECK(d2.lc_factor == P("x", XYP));
}

TEST_CASE("criminant triangularization on the worked webs") {
    CriminantResult c = criminant(make_surface(P("y*p^2 + x*p", XYP)));
    CHECK(!c.empty);
    CHECK(c.solved_var == "x");
    CHECK(equal_up_to_unit(c.relation, P("2*p*y + x", XYP)));
    CHECK(equal_up_to_unit(c.eliminated, P("p^2*y", XYP)));
    REQUIRE(c.components.size() == 2);
    CHECK(c.components[0].factor == P("p", XYP));
    CHECK(c.components[1].factor == P("y", XYP));

    CriminantResult c2 = criminant(make_surface(P("x*p^2 - y*p + 1", XYP)));
    CHECK(c2.solved_var == "y");
    CHECK(equal_up_to_unit(c2.eliminated, P("x*p^2 - 1", XYP)));
    CHECK(equal_up_to_unit(c2.relation, P("y - 2*x*p", XYP)));

    // A web transverse to itself everywhere: p^2 - 1 has empty criminant.
    CriminantResult c3 = criminant(make_surface(P("p^2 - 1", XYP)));
    CHECK(c3.empty);
}

TEST_CASE("graph charts prefer y, then x, then p") {
    SurfaceF s = make_surface(P("y*p + x", XYP));
    auto charts = graph_charts(s);
    REQUIRE(charts.size() == 3);
    CHECK(charts[0].solved == "y");
    CHECK(charts[1].solved == "x");
    CHECK(charts[2].solved == "p");

    // Only linear coordinates give charts.
    auto charts2 = graph_charts(make_surface(P("p^2 + x", XYP)));
    REQUIRE(charts2.size() == 1);
    CHECK(charts2[0].solved == "x");
}

TEST_CASE("planar restriction is saturated") {
    std::mt19937 rng(2505);
    int done = 0;
    while (done < 20) {
        // Surfaces linear in y always restrict through the y-chart.
        MultiPoly A = rand_nonzero_poly(rng, {"x", "p"}, 2, 2);
        MultiPoly B = rand_poly(rng, {"x", "p"}, 2, 2);
        MultiPoly F = A * MultiPoly::variable("y") + B;
        SurfaceF s;
        try {
            s = make_surface(F);
        } catch (const precondition_error&) {
            continue;
        }
        PlanarForm r;
        try {
            r = planar_restriction(s);
        } catch (const precondition_error&) {
            continue; // restriction degenerated to zero; not the property under test
        }
        CHECK(gcd(r.a, r.b).is_constant());
        CHECK(!(r.a.is_zero() && r.b.is_zero()));
        ++done;
    }
}

TEST_CASE("the circles web restricts to its classical planar form") {
    SurfaceF s = make_surface(P("y*p + x", XYP));
    PlanarForm r = planar_restriction(s);
    CHECK(r.str() == "(p^3 + p)*dx - x*dp");
    CHECK(r.u == "x");
    CHECK(r.v == "p");
    CHECK(r.a == P("p^3 + p", XYP));
    CHECK(r.b == P("-x", XYP));
}

TEST_CASE("invariant curve membership is decided by exact division") {
    // Radial foliation x dy - y dx: lines through the origin are leaves.
    PlanarForm radial{"x", "y", P("-y", {"x", "y"}), P("x", {"x", "y"})};
    InvarianceVerdict v1 = invariant_curve_check(radial, P("y", {"x", "y"}));
    CHECK(v1.invariant);
    CHECK(v1.witness == MultiPoly::constant(GaussianRational(1)));
    CHECK(invariant_curve_check(radial, P("x", {"x", "y"})).invariant);
    CHECK(invariant_curve_check(radial, P("x + y", {"x", "y"})).invariant);

    InvarianceVerdict v2 = invariant_curve_check(radial, P("x + 1", {"x", "y"}));
    CHECK(!v2.invariant);
    CHECK(!v2.witness.is_zero());
    // The remainder witness really is the derivative reduced modulo the curve.
    CHECK(v2.derivative == P("x", {"x", "y"}));
}

TEST_CASE("criminant invariance on the circles web") {
    auto entries = criminant_invariance(make_surface(P("y*p^2 + x*p", XYP)));
    REQUIRE(entries.size() == 2);
    CHECK(!entries[0].invariant); // {p = x = 0} is transverse to the restriction
    CHECK(entries[1].invariant);  // {x = y = 0} sits inside {x = 0}, which is a leaf
    CHECK(entries[1].curve == P("x", XYP));
}

TEST_CASE("affine emptiness of a coprime pair is decided exactly") {
    MultiPoly u = MultiPoly::variable("u"), v = MultiPoly::variable("v");
    MultiPoly one = MultiPoly::constant(GaussianRational(1));
    CHECK(!affine_locus_empty(u, v, "u", "v"));
    CHECK(affine_locus_empty(u, u + one, "u", "v"));
    CHECK(affine_locus_empty(u * v - one, u, "u", "v"));
    CHECK(!affine_locus_empty(u * v - one, u - v, "u", "v"));
}

TEST_CASE("dicritical verdicts of the worked webs") {
    DicriticalVerdict lines = dicritical(make_surface(P("p", XYP)));
    CHECK(lines.dicritical);
    DicriticalVerdict circles = dicritical(make_surface(P("y*p + x", XYP)));
    CHECK(!circles.dicritical);
    CHECK(!circles.locus.empty);
    DicriticalVerdict conic = dicritical(make_surface(P("x*p^2 - y*p + 1", XYP)));
    CHECK(conic.dicritical);
    CHECK(conic.restriction.str() == "dp");
}

TEST_CASE("factorizations are verified before being trusted") {
    MultiPoly F = P("y*p^2 + x*p", XYP);
    CHECK_NOTHROW(verify_factorization(F, {P("p", XYP), P("y*p + x", XYP)}));
    CHECK_THROWS_AS(verify_factorization(F, {P("p", XYP), P("p + 1", XYP)}),
                    precondition_error);
    CHECK_THROWS_AS(verify_factorization(P("p^2", XYP), {P("p", XYP), P("p", XYP)}),
                    precondition_error);
    CHECK_THROWS_AS(verify_factorization(F, {MultiPoly::constant(GaussianRational(1)), F}),
                    precondition_error);
}

TEST_CASE("curve families eliminate to their envelope webs") {
    auto pencil = web_from_curve_family(P("x - t*y", {"x", "y", "t"}), "t");
    REQUIRE(pencil.surface.has_value());
    CHECK(pencil.surface->F == P("p*x - y", XYP));
    CHECK(pencil.extraneous.is_unit());

    auto conic = web_from_curve_family(P("t^2 + t*y + x", {"x", "y", "t"}), "t");
    REQUIRE(conic.surface.has_value());
    CHECK(conic.surface->F == P("x*p^2 - y*p + 1", XYP));

    auto circles = web_from_curve_family(P("x^2 + y^2 + t^2", {"x", "y", "t"}), "t");
    REQUIRE(circles.surface.has_value());
    CHECK(circles.surface->F == P("p*y + x", XYP));
    CHECK(equal_up_to_unit(circles.raw, P("(p*y + x)^2", XYP)));
    CHECK(circles.extraneous == P("p*y + x", XYP));

    // Horizontal lines give the web dy; a p-free elimination gives no web.
    auto horiz = web_from_curve_family(P("y - t", {"y", "t"}), "t");
    REQUIRE(horiz.surface.has_value());
    CHECK(horiz.surface->F == P("p", XYP));
    auto vert = web_from_curve_family(P("x - t", {"x", "t"}), "t");
    CHECK(!vert.surface.has_value());
    CHECK(vert.raw.is_constant());

    CHECK_THROWS_AS(web_from_curve_family(P("(t - x)^2", {"x", "t"}), "t"),
                    precondition_error);
}

TEST_CASE("elimination degree never exceeds the parameter degree") {
    std::mt19937 rng(2606);
    int done = 0;
    while (done < 20) {
        MultiPoly Pf;
        std::uniform_int_distribution<unsigned> td(1, 3);
        unsigned dt = td(rng);
        for (unsigned j = 0; j <= dt; ++j)
            Pf += rand_poly(rng, {"x", "y"}, 1, 2) * MultiPoly::variable("t").pow(j);
        if (Pf.degree("t") < 1) continue;
        CurveFamilyWeb fam;
        try {
            fam = web_from_curve_family(Pf, "t");
        } catch (const precondition_error&) {
            continue;
        }
        if (fam.surface) CHECK(fam.surface->F.degree("p") <= Pf.degree("t"));
        ++done;
    }
}
