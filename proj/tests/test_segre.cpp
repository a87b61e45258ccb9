#include "doctest.h"

#include "holoweb/parser.hpp"
#include "holoweb/segre.hpp"
#include "random_inputs.hpp"

using namespace holoweb;
using namespace holoweb::testing;

namespace {

const std::vector<std::string> HV{"x", "y", "cx", "cy"};
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYP{"x", "y", "p"};

MultiPoly P(const std::string& text, std::vector<std::string> vars) {
    return parse_poly(text, vars);
}

// G + swap(conj G) is real for any G: the conjugate-exponent pairing holds by
// construction.
MultiPoly rand_real_hermitian(std::mt19937& rng) {
    MultiPoly G = rand_poly(rng, HV, 2, 3, true);
    std::map<std::string, MultiPoly> swap{{"x", MultiPoly::variable("cx")},
                                          {"y", MultiPoly::variable("cy")},
                                          {"cx", MultiPoly::variable("x")},
                                          {"cy", MultiPoly::variable("y")}};
    return G + conj_coeffs(G).substitute(swap);
}

MultiPoly re_norm2() { return parse_ratfunc("(x^2 + y^2 + cx^2 + cy^2)/2", HV).as_poly(); }
MultiPoly im_xybar() { return parse_ratfunc("(x*cy - y*cx)/(2*i)", HV).as_poly(); }

} // namespace

TEST_CASE("reality holds exactly for conjugate-paired coefficients") {
    CHECK(reality_check(re_norm2()));
    CHECK(reality_check(im_xybar()));

    std::string why;
    CHECK(!reality_check(P("x*cy", HV), &why));
    CHECK(why.find("cy*x") != std::string::npos);

    CHECK_THROWS_AS(make_hermitian(P("x*cy", HV)), precondition_error);
    CHECK_THROWS_AS(make_hermitian(P("z", {"z"})), precondition_error);
}

TEST_CASE("reality is stable under real scaling and broken by i") {
    std::mt19937 rng(4101);
    for (int iter = 0; iter < 20; ++iter) {
        MultiPoly F = rand_real_hermitian(rng);
        CHECK(reality_check(F));
        GaussianRational r(rand_nonzero_rat(rng, 6).re());
        CHECK(reality_check(MultiPoly::constant(r) * F));
        if (!F.is_zero())
            CHECK(!reality_check(MultiPoly::constant(GaussianRational::imaginary_unit()) * F));
    }
}

TEST_CASE("a point lies on its own Segre variety with the defining value") {
    std::mt19937 rng(4202);
    int done = 0;
    while (done < 50) {
        MultiPoly F = rand_real_hermitian(rng);
        if (F.is_zero()) continue;
        HermitianPoly h = make_hermitian(F);
        GaussianRational w1 = rand_rat(rng, 4, true), w2 = rand_rat(rng, 4, true);
        MultiPoly Q = segre_variety(h, {w1, w2});
        GaussianRational on_q = Q.eval({{"x", w1}, {"y", w2}});
        GaussianRational direct = F.eval(
            {{"x", w1}, {"y", w2}, {"cx", w1.conj()}, {"cy", w2.conj()}});
        CHECK(on_q == direct);
        CHECK(direct.is_real()); // F is a real polynomial evaluated at (z, conj z)
        ++done;
    }
}

TEST_CASE("Segre degeneracy marks dicritical points only") {
    HermitianPoly cone = make_hermitian(im_xybar());
    CHECK(is_segre_degenerate(cone, {GaussianRational(0), GaussianRational(0)}));
    CHECK(!is_segre_degenerate(cone, {GaussianRational(1), GaussianRational(1)}));

    HermitianPoly sphere = make_hermitian(re_norm2());
    CHECK(!is_segre_degenerate(sphere, {GaussianRational(0), GaussianRational(0)}));
    CHECK(segre_variety(sphere, {GaussianRational(0), GaussianRational(0)}) ==
          parse_ratfunc("(x^2 + y^2)/2", XY).as_poly());
}

TEST_CASE("Segre families slice the hypersurface into curve families") {
    HermitianPoly ball = make_hermitian(P("x*cx + y*cy - 1", HV));
    MultiPoly fam = segre_family(ball, {GaussianRational(1), GaussianRational(0)},
                                       {GaussianRational(0), GaussianRational(0)});
    CHECK(fam == P("t*x - 1", {"x", "t"}));

    // Im(x conj(y)) sliced along w(t) = (t, 1) is the line pencil through 0,
    // and its elimination is the radial web.
    HermitianPoly cone = make_hermitian(im_xybar());
    MultiPoly pencil = segre_family(cone, {GaussianRational(1), GaussianRational(0)},
                                          {GaussianRational(0), GaussianRational(1)});
    CHECK(equal_up_to_unit(pencil, P("x - t*y", {"x", "y", "t"})));
    auto web = web_from_curve_family(pencil, "t");
    REQUIRE(web.surface.has_value());
    CHECK(web.surface->F == P("p*x - y", XYP));
}

TEST_CASE("tangency of the circles web to its Levi-flat pieces") {
    SurfaceF s = make_surface(P("y*p^2 + x*p", XYP));
    TangencyVerdict t1 = tangency_check(s, P("x^2 + y^2", XY));
    CHECK(t1.tangent);
    CHECK(t1.witness.is_zero());
    TangencyVerdict t2 = tangency_check(s, P("y", XY));
    CHECK(t2.tangent);

    // x + y is not a union of leaves of the radial web's level family.
    TangencyVerdict t3 = tangency_check(make_surface(P("x*p - y", XYP)), P("x + y", XY));
    CHECK(!t3.tangent);
    CHECK(t3.witness == P("-x - y", XY));

    CHECK_THROWS_AS(tangency_check(s, MultiPoly::constant(GaussianRational(3))),
                    precondition_error);
}

TEST_CASE("pencil members are leaves even though the level family is not") {
    // The leaf test asks for the whole family {h = c} at once; for the line
    // pencil only the member {h = 0} itself is a leaf, and the witness says
    // exactly that by reducing to h up to a unit.
    SurfaceF pencil = make_surface(P("x*p - y", XYP));
    std::mt19937 rng(4303);
    for (int iter = 0; iter < 5; ++iter) {
        GaussianRational lambda(rand_nonzero_rat(rng, 6).re());
        MultiPoly h = P("x", XY) - MultiPoly::constant(lambda) * P("y", XY);
        TangencyVerdict v = tangency_check(pencil, h);
        CHECK(!v.tangent);
        CHECK(equal_up_to_unit(v.witness, h));
    }
}

TEST_CASE("vertical level lines are compared against the leading structure") {
    TangencyVerdict v = tangency_check(make_surface(P("y*p^2 + x*p", XYP)), P("x", XY));
    CHECK(!v.tangent);
    CHECK(v.witness == P("y", XY));
    REQUIRE(!v.notes.empty());
    CHECK(v.notes.front().find("vertical") != std::string::npos);
}
