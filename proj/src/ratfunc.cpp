#include "holoweb/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace holoweb {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = MultiPoly(num.vars());
        den_ = MultiPoly::constant(GaussianRational(1));
        return;
    }
    MultiPoly g = gcd(num, den);
    num_ = divide_exact(num, g);
    den_ = divide_exact(den, g);
    GaussianRational lc = den_.lead_coeff();
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::raw(MultiPoly n, MultiPoly d) {
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

MultiPoly RationalFunction::as_poly() const {
    if (!is_polynomial())
        throw std::domain_error("rational function is not a polynomial: denominator " + den_.str());
    return num_; // normalized denominator of a polynomial is exactly 1
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction acc = RationalFunction::constant(GaussianRational(1));
    RationalFunction base = *this;
    unsigned k = static_cast<unsigned>(n);
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
    return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return as_poly().str();
    std::string n = num_.str(), d = den_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RationalFunction substitute(const MultiPoly& f, const std::map<std::string, RationalFunction>& bindings) {
    RationalFunction acc;
    const auto& vars = f.vars();
    for (const auto& [e, c] : f.terms()) {
        RationalFunction term = RationalFunction::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars[i]);
            RationalFunction base =
                (it != bindings.end()) ? it->second : RationalFunction::variable(vars[i]);
            term = term * base.pow(static_cast<int>(e[i]));
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

// Ascending coefficient list of a univariate polynomial.
std::vector<GaussianRational> coeff_list(const MultiPoly& f, const std::string& var) {
    int d = f.degree(var);
    std::vector<GaussianRational> out(static_cast<std::size_t>(std::max(d, 0)) + 1, GaussianRational(0));
    for (int k = 0; k <= d; ++k) {
        MultiPoly c = f.coeff_of(var, static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        if (!c.is_constant())
            throw std::invalid_argument("residue: expression is not univariate in " + var);
        out[static_cast<std::size_t>(k)] = c.constant_value();
    }
    return out;
}

} // namespace

GaussianRational residue_at(const RationalFunction& r, const std::string& var, const GaussianRational& point) {
    if (r.is_zero()) return GaussianRational(0);
    // Shift the point to the origin.
    MultiPoly shift = MultiPoly::variable(var) + MultiPoly::constant(point);
    std::map<std::string, MultiPoly> sub{{var, shift}};
    MultiPoly n = r.num().substitute(sub);
    MultiPoly d = r.den().substitute(sub);

    std::vector<GaussianRational> nc = coeff_list(n, var);
    std::vector<GaussianRational> dc = coeff_list(d, var);
    std::size_t m = 0;
    while (m < dc.size() && dc[m].is_zero()) ++m;
    if (m >= dc.size()) throw std::logic_error("residue: zero denominator");
    if (m == 0) return GaussianRational(0); // no pole at the point

    // r = N / (s^m E) with E(0) != 0; the residue is the coefficient of
    // s^(m-1) in the power series N/E.
    std::vector<GaussianRational> series(m, GaussianRational(0));
    GaussianRational e0inv = dc[m].inverse();
    for (std::size_t k = 0; k < m; ++k) {
        GaussianRational acc = k < nc.size() ? nc[k] : GaussianRational(0);
        for (std::size_t j = 1; j <= k && m + j < dc.size(); ++j)
            acc -= dc[m + j] * series[k - j];
        series[k] = acc * e0inv;
    }
    return series[m - 1];
}

GaussianRational residue_at_infinity(const RationalFunction& r, const std::string& var) {
    if (r.is_zero()) return GaussianRational(0);
    const std::string t = var == "t" ? "tinf" : "t";
    RationalFunction tinv = RationalFunction::variable(t).inverse();
    RationalFunction pulled = substitute(r.num(), {{var, tinv}}) / substitute(r.den(), {{var, tinv}});
    pulled = pulled * tinv * tinv;
    return -residue_at(pulled, t, GaussianRational(0));
}

} // namespace holoweb
