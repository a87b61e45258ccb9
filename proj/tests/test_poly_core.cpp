#include "doctest.h"

#include "holoweb/parser.hpp"
#include "holoweb/polyops.hpp"
#include "holoweb/ratfunc.hpp"
#include "random_inputs.hpp"

#include <map>

using namespace holoweb;
using namespace holoweb::testing;

namespace {

MultiPoly P(const std::string& text, std::vector<std::string> vars) {
    return parse_poly(text, vars);
}

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

} // namespace

TEST_CASE("gaussian rationals stay canonical") {
    CHECK(GaussianRational::fraction(2, 4).str() == "1/2");
    CHECK(GaussianRational::fraction(-6, -4).str() == "3/2");
    GaussianRational i = GaussianRational::imaginary_unit();
    CHECK((i * i).str() == "-1");
    CHECK((i * i * i * i).is_one());
    GaussianRational q(mpq_class(1, 2), mpq_class(3, 4));
    CHECK(q.str() == "1/2+3/4*i");
    CHECK(q.conj().str() == "1/2-3/4*i");
    CHECK((q * q.conj()).str() == (GaussianRational(mpq_class(q.norm()))).str());
    CHECK((q * q.inverse()).is_one());
    CHECK_THROWS(GaussianRational(0).inverse());
}

TEST_CASE("exact square roots") {
    CHECK(sqrt_exact(mpq_class(9, 4)).value() == mpq_class(3, 2));
    CHECK(!sqrt_exact(mpq_class(2)).has_value());
    CHECK(!sqrt_exact(mpq_class(-1)).has_value());

    // In Q(i): sqrt(2i) = 1 + i, sqrt(-1) = +-i, sqrt(2) stays irrational.
    auto r = sqrt_exact(GaussianRational(mpq_class(0), mpq_class(2)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussianRational(mpq_class(0), mpq_class(2)));
    auto mi = sqrt_exact(GaussianRational(-1));
    REQUIRE(mi.has_value());
    CHECK((*mi * *mi).str() == "-1");
    CHECK(!sqrt_exact(GaussianRational(2)).has_value());
}

TEST_CASE("polynomial ring identities on random triples") {
    std::mt19937 rng(101);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 200; ++iter) {
        MultiPoly f = rand_poly(rng, vars, 3, 3, true);
        MultiPoly g = rand_poly(rng, vars, 3, 3, true);
        MultiPoly h = rand_poly(rng, vars, 2, 2, true);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);

        // d/dx is a derivation.
        CHECK((f * g).derivative("x") == f.derivative("x") * g + f * g.derivative("x"));
        CHECK((f + g).derivative("y") == f.derivative("y") + g.derivative("y"));

        // Substitution is a ring homomorphism.
        std::map<std::string, MultiPoly> bind{{"x", h}, {"y", var("x") + var("y")}};
        CHECK((f * g).substitute(bind) == f.substitute(bind) * g.substitute(bind));
        CHECK((f + g).substitute(bind) == f.substitute(bind) + g.substitute(bind));
    }
}

TEST_CASE("printer and parser round-trip") {
    std::mt19937 rng(202);
    const std::vector<std::string> vars{"u", "v", "w"};
    for (int iter = 0; iter < 100; ++iter) {
        MultiPoly f = rand_poly(rng, vars, 4, 4, true);
        CHECK(parse_poly(f.str(), vars) == f);
    }
    CHECK(parse_poly("0", {}) == MultiPoly());
    CHECK(parse_gaussian("(1+i)^2/2").str() == "i");
    CHECK_THROWS_AS(parse_poly("x**2", {"x"}), parse_error);
    CHECK_THROWS_AS(parse_poly("q", {"x"}), parse_error);
    CHECK_THROWS_AS(parse_poly("1/(x+1)", {"x"}), parse_error); // not a polynomial
}

TEST_CASE("exact division decides divisibility") {
    std::mt19937 rng(303);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 100; ++iter) {
        MultiPoly f = rand_nonconstant_poly(rng, vars, 3, 3, true);
        MultiPoly g = rand_nonzero_poly(rng, vars, 3, 3, true);
        auto q = try_divide(f * g, f);
        REQUIRE(q.has_value());
        CHECK(*q == g);
        // f*g + 1 cannot be divisible by the nonconstant f as well.
        CHECK(!try_divide(f * g + MultiPoly::constant(GaussianRational(1)), f).has_value());
    }
    CHECK_THROWS(divide_exact(P("x + 1", {"x"}), P("x", {"x"})));
}

TEST_CASE("gcd finds planted common factors") {
    std::mt19937 rng(404);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 40; ++iter) {
        MultiPoly f = rand_nonzero_poly(rng, vars, 2, 2, true);
        MultiPoly g = rand_nonzero_poly(rng, vars, 2, 2, true);
        MultiPoly h = rand_nonconstant_poly(rng, vars, 2, 2, true);
        MultiPoly d = gcd(f * h, g * h);
        CHECK(divides(h, d * MultiPoly::constant(h.lead_coeff())));
        CHECK(divides(d, f * h));
        CHECK(divides(d, g * h));
    }
    CHECK(gcd(MultiPoly(), P("x", {"x"})) == P("x", {"x"}));
}

TEST_CASE("resultant conventions pinned on symbols") {
    // Res_v(a v + b, c v + d) is the 2x2 Sylvester determinant a d - b c.
    MultiPoly f = var("a") * var("v") + var("b");
    MultiPoly g = var("c") * var("v") + var("d");
    CHECK(resultant(f, g, "v") == var("a") * var("d") - var("b") * var("c"));
    // v-free second argument: Res(f, g) = g^deg(f); f*f + v*f has v-degree 2.
    MultiPoly h = var("c") + var("d");
    CHECK(resultant(f * f + var("v") * f, h, "v") == h.pow(2));
    CHECK_THROWS_AS(resultant(var("a"), var("b"), "v"), precondition_error);
}

TEST_CASE("resultant against the root-product oracle") {
    // f = a * prod (v - r_i) with polynomial roots r_i(u) makes
    // Res_v(f, g) = a^deg(g) * prod g(u, r_i(u)) an exact identity.
    std::mt19937 rng(505);
    const std::vector<std::string> uvars{"u"};
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> nroots(1, 3);
        int n = nroots(rng);
        MultiPoly a = rand_nonzero_poly(rng, uvars, 1, 2, true);
        MultiPoly f = a;
        std::vector<MultiPoly> roots;
        for (int k = 0; k < n; ++k) {
            roots.push_back(rand_poly(rng, uvars, 2, 2, true));
            f = f * (var("v") - roots.back());
        }
        MultiPoly g = rand_poly(rng, {"u", "v"}, 2, 3, true);
        while (g.degree("v") < 1) g = rand_poly(rng, {"u", "v"}, 2, 3, true);
        MultiPoly expected = a.pow(static_cast<unsigned>(g.degree("v")));
        for (const auto& r : roots) expected = expected * g.substitute({{"v", r}});
        CHECK(resultant(f, g, "v") == expected);
    }
}

TEST_CASE("resultant specialization detects shared roots exactly") {
    std::mt19937 rng(606);
    int checked = 0;
    while (checked < 100) {
        MultiPoly f = rand_poly(rng, {"u", "v"}, 2, 3, true);
        MultiPoly g = rand_poly(rng, {"u", "v"}, 2, 3, true);
        // Half the time plant a shared root so both sides of the iff fire.
        if (checked % 2 == 0) {
            MultiPoly common = var("v") - rand_poly(rng, {"u"}, 1, 2, true);
            f = f * common;
            g = g * common;
        }
        if (f.degree("v") < 1 || g.degree("v") < 1) continue;
        GaussianRational u0 = rand_rat(rng, 4, true);
        MultiPoly u0p = MultiPoly::constant(u0);
        if (f.lead_coeff_in("v").substitute({{"u", u0p}}).is_zero()) continue;
        if (g.lead_coeff_in("v").substitute({{"u", u0p}}).is_zero()) continue;

        MultiPoly res = resultant(f, g, "v");
        MultiPoly fs = f.substitute({{"u", u0p}});
        MultiPoly gs = g.substitute({{"u", u0p}});
        bool share = gcd(fs, gs).total_degree() > 0;
        bool res_zero = res.substitute({{"u", u0p}}).is_zero();
        CHECK(res_zero == share);
        ++checked;
    }
}

TEST_CASE("discriminant of a quadratic is b^2 - 4ac") {
    std::mt19937 rng(707);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 50; ++iter) {
        MultiPoly a = rand_nonzero_poly(rng, vars, 2, 2, true);
        MultiPoly b = rand_poly(rng, vars, 2, 2, true);
        MultiPoly c = rand_poly(rng, vars, 2, 2, true);
        MultiPoly f = a * var("p").pow(2) + b * var("p") + c;
        CHECK(discriminant(f, "p") == b * b - GaussianRational(4) * a * c);
    }
}

TEST_CASE("residues of simple poles and at infinity") {
    std::mt19937 rng(808);
    MultiPoly v = var("v");
    for (int iter = 0; iter < 30; ++iter) {
        // r = sum A_k / (v - c_k) with distinct rational poles.
        std::uniform_int_distribution<int> npoles(2, 4);
        int n = npoles(rng);
        std::vector<GaussianRational> poles, coefs;
        while (static_cast<int>(poles.size()) < n) {
            GaussianRational c = rand_rat(rng, 6, true);
            bool fresh = true;
            for (const auto& p : poles) fresh = fresh && p != c;
            if (fresh) {
                poles.push_back(c);
                coefs.push_back(rand_nonzero_rat(rng, 5, true));
            }
        }
        RationalFunction r;
        for (int k = 0; k < n; ++k)
            r = r + RationalFunction(MultiPoly::constant(coefs[k]),
                                     v - MultiPoly::constant(poles[k]));
        GaussianRational sum(0);
        for (int k = 0; k < n; ++k) {
            GaussianRational res = residue_at(r, "v", poles[k]);
            CHECK(res == coefs[k]);
            sum += res;
        }
        CHECK(sum + residue_at_infinity(r, "v") == GaussianRational(0));

        // The derivative of any rational function has zero residue everywhere.
        CHECK(residue_at(r.derivative("v"), "v", poles[0]) == GaussianRational(0));
    }
    // Double pole with no 1/v term.
    RationalFunction dp(MultiPoly::constant(GaussianRational(3)), v * v);
    CHECK(residue_at(dp, "v", GaussianRational(0)) == GaussianRational(0));
}

TEST_CASE("squarefree part is a radical") {
    std::mt19937 rng(909);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 30; ++iter) {
        MultiPoly f = rand_nonconstant_poly(rng, vars, 2, 2, true);
        MultiPoly g = rand_nonconstant_poly(rng, vars, 2, 2, true);
        MultiPoly r1 = squarefree_part(f * f * g);
        MultiPoly r2 = squarefree_part(f * g);
        CHECK(r1 == r2);
        CHECK(squarefree_part(r1) == r1);
        CHECK(divides(r1, f * g));
    }
}

TEST_CASE("exact roots with honest leftovers") {
    auto [r1, rest1] = exact_roots(P("v^2 + 1", {"v"}), "v");
    REQUIRE(r1.size() == 2);
    CHECK(((r1[0] == GaussianRational::imaginary_unit() &&
            r1[1] == -GaussianRational::imaginary_unit()) ||
           (r1[1] == GaussianRational::imaginary_unit() &&
            r1[0] == -GaussianRational::imaginary_unit())));
    CHECK(rest1.is_unit());

    auto [r2, rest2] = exact_roots(P("v^3 - v", {"v"}), "v");
    CHECK(r2.size() == 3);
    CHECK(rest2.is_unit());

    auto [r3, rest3] = exact_roots(P("v^3 - 2", {"v"}), "v");
    CHECK(r3.empty());
    CHECK(rest3 == P("v^3 - 2", {"v"}));

    auto [r4, rest4] = exact_roots(P("v^3 - 2*v", {"v"}), "v");
    REQUIRE(r4.size() == 1);
    CHECK(r4[0] == GaussianRational(0));
    CHECK(rest4 == P("v^2 - 2", {"v"}));
}

TEST_CASE("rational functions normalize to a canonical quotient") {
    std::mt19937 rng(111);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 40; ++iter) {
        MultiPoly n = rand_poly(rng, vars, 3, 3, true);
        MultiPoly d = rand_nonzero_poly(rng, vars, 3, 3, true);
        MultiPoly s = rand_nonzero_poly(rng, vars, 2, 2, true);
        // Common factors cancel: (n s)/(d s) == n/d as represented values.
        CHECK(RationalFunction(n * s, d * s) == RationalFunction(n, d));
    }
    RationalFunction f = parse_ratfunc("(x^2 - 1)/(x - 1)", {"x"});
    CHECK(f.is_polynomial());
    CHECK(f.as_poly() == P("x + 1", {"x"}));
}
