#pragma once

#include "holoweb/multipoly.hpp"

#include <random>
#include <string>
#include <vector>

// Small random polynomials for property tests. Coefficients are kept tiny so
// intermediate resultants stay readable when a case fails.
namespace holoweb::testing {

inline GaussianRational rand_rat(std::mt19937& rng, int span = 5, bool gaussian = false) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    mpq_class re(num(rng), den(rng));
    re.canonicalize();
    if (!gaussian) return GaussianRational(re);
    mpq_class im(num(rng), den(rng));
    im.canonicalize();
    return GaussianRational(re, im);
}

inline GaussianRational rand_nonzero_rat(std::mt19937& rng, int span = 5, bool gaussian = false) {
    for (;;) {
        GaussianRational q = rand_rat(rng, span, gaussian);
        if (!q.is_zero()) return q;
    }
}

inline MultiPoly rand_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                           unsigned max_deg, int terms, bool gaussian = false) {
    MultiPoly f;
    std::uniform_int_distribution<unsigned> exp(0, max_deg);
    for (int k = 0; k < terms; ++k) {
        MultiPoly mono = MultiPoly::constant(rand_rat(rng, 5, gaussian));
        for (const auto& v : vars) mono = mono * MultiPoly::variable(v).pow(exp(rng));
        f += mono;
    }
    return f;
}

inline MultiPoly rand_nonzero_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                                   unsigned max_deg, int terms, bool gaussian = false) {
    for (;;) {
        MultiPoly f = rand_poly(rng, vars, max_deg, terms, gaussian);
        if (!f.is_zero()) return f;
    }
}

inline MultiPoly rand_nonconstant_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                                       unsigned max_deg, int terms, bool gaussian = false) {
    for (;;) {
        MultiPoly f = rand_poly(rng, vars, max_deg, terms, gaussian);
        if (f.total_degree() > 0) return f;
    }
}

} // namespace holoweb::testing
