#pragma once

#include "holoweb/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace holoweb {

// Exact single-divisor division. Returns f/g when g divides f, nullopt
// otherwise. Over a coefficient field the greedy leading-term loop is a
// complete decision procedure for divisibility.
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);

// As above but throws std::logic_error when the division is not exact; use
// where exactness is guaranteed by construction.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

// Normal form of f modulo the single divisor g (graded-lex reduction).
MultiPoly poly_remainder(const MultiPoly& f, const MultiPoly& g);

// Does f divide g? On success *cofactor (if given) receives g/f.
bool divides(const MultiPoly& f, const MultiPoly& g, MultiPoly* cofactor = nullptr);

// Pseudo-remainder of f by g with respect to var (classical prem).
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// gcd of the coefficients of f viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& f, const std::string& var);
MultiPoly primitive_part_in(const MultiPoly& f, const std::string& var);

// Multivariate gcd over Q(i), primitive pseudo-remainder sequences recursing
// through the variable list. Result is monic in the graded-lex sense.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

// Resultant of f and g with respect to var: Sylvester matrix, evaluated by
// fraction-free (Bareiss) elimination with exact polynomial divisions.
// Degenerate degrees follow the usual conventions: Res(f, g) = g^deg(f) when
// g is v-free, and both v-free is a precondition error.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// (-1)^(m(m-1)/2) Res(f, f') / lc, m = deg_var f. Requires m >= 1.
MultiPoly discriminant(const MultiPoly& f, const std::string& var);

// f with repeated factors involving var collapsed (content in var is kept).
MultiPoly squarefree_part_in(const MultiPoly& f, const std::string& var);

// Radical of f: every irreducible factor exactly once, monic.
MultiPoly squarefree_part(const MultiPoly& f);

// Splits off the monomial part: returns per-variable exponents m_v and the
// cofactor h with f = (prod v^m_v) * h and no variable dividing h.
std::pair<std::map<std::string, unsigned>, MultiPoly> split_monomial_factors(const MultiPoly& f);

// Distinct roots of a univariate polynomial that are expressible in Q(i):
// zero roots, linear factors, and quadratics solved by exact square roots.
// The second component is the (monic) unfactored remainder, 1 when all roots
// were recovered.
std::pair<std::vector<GaussianRational>, MultiPoly> exact_roots(const MultiPoly& f,
                                                                const std::string& var);

// Precondition failures (degenerate input shapes the callers must reject).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace holoweb
