#pragma once

#include "holoweb/multipoly.hpp"
#include "holoweb/polyops.hpp"

#include <map>
#include <string>

namespace holoweb {

// Quotient of two polynomials kept in lowest terms with a graded-lex monic
// denominator, so equal values have equal representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(MultiPoly::constant(GaussianRational(1))) {}
    RationalFunction(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(GaussianRational(1))) {}
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction constant(const GaussianRational& c) {
        return RationalFunction(MultiPoly::constant(c));
    }
    static RationalFunction variable(const std::string& name) {
        return RationalFunction(MultiPoly::variable(name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_unit(); }
    // Requires is_polynomial() (denominator reduced to a constant).
    MultiPoly as_poly() const;

    RationalFunction operator-() const { return raw(-num_, den_); }
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(int n) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative(const std::string& var) const;

    std::string str() const;

private:
    MultiPoly num_, den_;

    // Skips normalization when the caller knows the pair is reduced.
    static RationalFunction raw(MultiPoly n, MultiPoly d);
};

// Evaluates f with each variable replaced by the bound rational function;
// unbound variables stay symbolic.
RationalFunction substitute(const MultiPoly& f, const std::map<std::string, RationalFunction>& bindings);

// Residue of a univariate rational function at a finite point, computed by
// shifting to the origin and reading one power-series coefficient.
GaussianRational residue_at(const RationalFunction& r, const std::string& var, const GaussianRational& point);

// Residue at infinity: -res_0(r(1/t)/t^2).
GaussianRational residue_at_infinity(const RationalFunction& r, const std::string& var);

} // namespace holoweb
