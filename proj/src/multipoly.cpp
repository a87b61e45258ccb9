#include "holoweb/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace holoweb {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(sorted_unique(std::move(vars))) {}

MultiPoly MultiPoly::constant(const GaussianRational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("variable: empty name");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, GaussianRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

GaussianRational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on a non-constant polynomial");
    return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal total degree by the graded order.
    const Exponents& e = terms_.begin()->first;
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    return d;
}

int MultiPoly::degree(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return terms_.empty() ? -1 : 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
    return d;
}

GaussianRational MultiPoly::lead_coeff() const {
    return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    GaussianRational inv = lead_coeff().inverse();
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c *= inv;
    return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& extra) const {
    return remapped(merged(vars_, sorted_unique(extra)));
}

MultiPoly MultiPoly::remapped(const std::vector<std::string>& newvars) const {
    if (newvars == vars_) return *this;
    // Positions of the old variables inside the new list; every old variable
    // that actually occurs must be present.
    std::vector<int> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(newvars.begin(), newvars.end(), vars_[i]);
        if (it != newvars.end() && *it == vars_[i]) pos[i] = static_cast<int>(it - newvars.begin());
    }
    MultiPoly out;
    out.vars_ = newvars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(newvars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0) throw std::logic_error("remapped: dropping a used variable");
            ne[static_cast<std::size_t>(pos[i])] = e[i];
        }
        out.terms_[ne] += c; // distinct old terms stay distinct under injection
    }
    out.prune();
    return out;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> u = merged(a.vars_, b.vars_);
    a = a.remapped(u);
    b = b.remapped(u);
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

void MultiPoly::add_term(const Exponents& exp, const GaussianRational& coeff) {
    if (exp.size() != vars_.size()) throw std::logic_error("add_term: exponent arity mismatch");
    auto [it, fresh] = terms_.emplace(exp, coeff);
    if (!fresh) it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::coeff_of(const std::string& var, unsigned k) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return k == 0 ? *this : MultiPoly(vars_);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exponents ne = e;
        ne[idx] = 0;
        out.terms_.emplace(ne, c);
    }
    return out;
}

MultiPoly MultiPoly::lead_coeff_in(const std::string& var) const {
    int d = degree(var);
    return coeff_of(var, d <= 0 ? 0u : static_cast<unsigned>(d));
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MultiPoly(vars_);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.terms_.emplace(ne, GaussianRational(static_cast<long>(e[idx])) * c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    // Evaluate term by term; unbound variables map to themselves.
    MultiPoly acc;
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars_[i]);
            MultiPoly base = (it != bindings.end()) ? it->second : MultiPoly::variable(vars_[i]);
            term = term * base.pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

GaussianRational MultiPoly::eval(const std::map<std::string, GaussianRational>& point) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw std::invalid_argument("eval: unbound variable " + vars_[i]);
            GaussianRational b = it->second;
            for (unsigned k = 0; k < e[i]; ++k) t *= b;
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ == o.vars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    MultiPoly out;
    out.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) {
    if (c.is_zero()) return MultiPoly(p.vars());
    MultiPoly out = p;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly acc = MultiPoly::constant(GaussianRational(1));
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    return x.terms_ == y.terms_;
}

bool equal_up_to_unit(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    // Cross-multiply by leading coefficients so no inversion is needed.
    return g.lead_coeff() * f == f.lead_coeff() * g;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        // A coefficient with an interior sign ("1+2*i") must be guarded by
        // parentheses to survive re-parsing next to +/-.
        bool guard = false;
        for (std::size_t k = 1; k < cs.size(); ++k)
            if (cs[k] == '+' || cs[k] == '-') guard = true;
        std::string term;
        if (mono.empty()) {
            term = guard ? "(" + cs + ")" : cs;
        } else if (guard) {
            term = "(" + cs + ")*" + mono;
        } else if (cs == "1") {
            term = mono;
        } else if (cs == "-1") {
            term = "-" + mono;
        } else {
            term = cs + "*" + mono;
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace holoweb
