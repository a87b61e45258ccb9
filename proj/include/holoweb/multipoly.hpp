#pragma once

#include "holoweb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace holoweb {

// Exponent vector, aligned with a polynomial's variable list.
using Exponents = std::vector<unsigned>;

// Graded lexicographic order, descending: higher total degree first, ties
// broken by the exponent vector itself (earlier variables more significant).
// Used as the map comparator so begin() is always the leading term.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over the Gaussian rationals.
//
// Every polynomial carries a sorted list of variable names; exponent vectors
// are indexed against it. Arithmetic between polynomials with different
// variable lists first merges the lists, so alphabets never have to match
// up front. Terms with zero coefficient are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexGreater>;

    MultiPoly() = default; // zero over the empty alphabet
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(const GaussianRational& c);
    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    GaussianRational constant_value() const;
    bool is_unit() const { return is_constant() && !is_zero(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree(const std::string& var) const;
    std::size_t term_count() const { return terms_.size(); }
    bool uses(const std::string& var) const { return degree(var) > 0; }

    // Leading coefficient in the graded-lex order. Zero polynomial -> 0.
    GaussianRational lead_coeff() const;
    // Divides through by lead_coeff(); the zero polynomial stays zero.
    MultiPoly monic() const;

    // Extends the alphabet (no-op for variables already present).
    MultiPoly with_vars(const std::vector<std::string>& extra) const;

    // Coefficient of var^k, as a polynomial over the same alphabet.
    MultiPoly coeff_of(const std::string& var, unsigned k) const;
    MultiPoly lead_coeff_in(const std::string& var) const;

    MultiPoly derivative(const std::string& var) const;

    // Polynomial substitution var -> value for each map entry; unlisted
    // variables are left alone.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

    // Full evaluation; every variable that actually occurs must be bound.
    GaussianRational eval(const std::map<std::string, GaussianRational>& point) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p);
    MultiPoly pow(unsigned n) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Canonical form: graded-lex descending, monomial factors in alphabet
    // order, exact Gaussian-rational coefficients. Re-parses to the same
    // polynomial.
    std::string str() const;

    // Low-level term insertion (adds to any existing coefficient).
    void add_term(const Exponents& exp, const GaussianRational& coeff);

    // Rewrites both polynomials over the merged alphabet.
    static void align(MultiPoly& a, MultiPoly& b);

private:
    std::vector<std::string> vars_; // sorted, unique
    TermMap terms_;

    MultiPoly remapped(const std::vector<std::string>& newvars) const;
    void prune();
};

// f == unit * g for some nonzero constant unit?
bool equal_up_to_unit(const MultiPoly& f, const MultiPoly& g);

} // namespace holoweb
