#include "holoweb/polyops.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace holoweb {

namespace {

// Variables a polynomial actually uses, in alphabet order.
std::vector<std::string> used_vars(const MultiPoly& f) {
    std::vector<std::string> out;
    for (const auto& v : f.vars())
        if (f.uses(v)) out.push_back(v);
    return out;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Small test points for specializing away all variables but one; different
// salts give different points, so a vanishing leading coefficient only costs
// a retry.
int point_coord(std::size_t idx, unsigned salt) {
    static constexpr int wheel[16] = {1, -2, 3, 5, -1, 2, -3, 7, -5, 4, -7, 6, 9, -4, 8, -8};
    return wheel[(idx + 5 * static_cast<std::size_t>(salt)) % 16];
}

// deg_v of gcd(f, g) after sending every other variable to a small constant,
// or -1 when the point is unusable because a leading coefficient vanished.
// If both leading coefficients survive, deg_v of the true gcd is bounded by
// the returned value; in particular 0 proves the gcd is v-free.
int specialized_gcd_degree(const MultiPoly& f, const MultiPoly& g, const std::string& v,
                           unsigned salt) {
    std::map<std::string, MultiPoly> point;
    std::size_t idx = 0;
    for (const auto& w : f.vars())
        if (w != v && (f.uses(w) || g.uses(w)))
            point.emplace(w, MultiPoly::constant(GaussianRational(point_coord(idx++, salt))));
    for (const auto& w : g.vars())
        if (w != v && g.uses(w) && !point.count(w))
            point.emplace(w, MultiPoly::constant(GaussianRational(point_coord(idx++, salt))));
    MultiPoly a = f.substitute(point), b = g.substitute(point);
    if (a.degree(v) != f.degree(v) || b.degree(v) != g.degree(v)) return -1;
    while (!b.is_zero()) {
        MultiPoly r = poly_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree(v);
}

} // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("try_divide: division by zero polynomial");
    MultiPoly r = f, d = g;
    MultiPoly::align(r, d);
    MultiPoly q(r.vars());
    const Exponents& de = d.terms().begin()->first;
    const GaussianRational dc = d.terms().begin()->second;
    while (!r.is_zero()) {
        const Exponents& re = r.terms().begin()->first;
        if (!exp_divides(de, re)) return std::nullopt;
        Exponents qe(re.size());
        for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = re[i] - de[i];
        GaussianRational qc = r.terms().begin()->second / dc;
        MultiPoly qt(r.vars());
        qt.add_term(qe, qc);
        q += qt;
        r -= qt * d;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
    auto q = try_divide(f, g);
    if (!q) throw std::logic_error("divide_exact: inexact division");
    return *q;
}

MultiPoly poly_remainder(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return f;
    MultiPoly r = f, d = g;
    MultiPoly::align(r, d);
    MultiPoly rem(r.vars());
    const Exponents& de = d.terms().begin()->first;
    const GaussianRational dc = d.terms().begin()->second;
    while (!r.is_zero()) {
        const Exponents re = r.terms().begin()->first;
        const GaussianRational rc = r.terms().begin()->second;
        MultiPoly t(r.vars());
        if (exp_divides(de, re)) {
            Exponents qe(re.size());
            for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = re[i] - de[i];
            t.add_term(qe, rc / dc);
            r -= t * d;
        } else {
            t.add_term(re, rc);
            rem += t;
            r -= t;
        }
    }
    return rem;
}

bool divides(const MultiPoly& f, const MultiPoly& g, MultiPoly* cofactor) {
    auto q = try_divide(g, f);
    if (!q) return false;
    if (cofactor) *cofactor = *q;
    return true;
}

MultiPoly prem(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    int n = g.degree(var);
    if (n <= -1) throw std::invalid_argument("prem: zero divisor");
    MultiPoly lc = g.lead_coeff_in(var);
    MultiPoly r = f;
    MultiPoly v = MultiPoly::variable(var);
    while (true) {
        int m = r.degree(var);
        if (r.is_zero() || m < n) return r;
        MultiPoly rl = r.lead_coeff_in(var);
        r = lc * r - rl * v.pow(static_cast<unsigned>(m - n)) * g;
    }
}

MultiPoly content_in(const MultiPoly& f, const std::string& var) {
    int d = f.degree(var);
    if (d <= -1) return MultiPoly(f.vars());
    MultiPoly c(f.vars());
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck = f.coeff_of(var, static_cast<unsigned>(k));
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd(c, ck);
        if (c.is_unit()) break;
    }
    return c.is_zero() ? c : c.monic();
}

MultiPoly primitive_part_in(const MultiPoly& f, const std::string& var) {
    if (f.is_zero()) return f;
    return divide_exact(f, content_in(f, var));
}

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return MultiPoly::constant(GaussianRational(1));

    // Main variable: alphabetically first one used by either argument.
    std::vector<std::string> uf = used_vars(f), ug = used_vars(g);
    std::string v = std::min(uf.front(), ug.front());

    // A common divisor of a v-free polynomial is itself v-free.
    if (f.degree(v) <= 0) return gcd(f, content_in(g, v));
    if (g.degree(v) <= 0) return gcd(content_in(f, v), g);

    // Coprime-in-v inputs are the common case, and the pseudo-remainder
    // sequence below is expensive with many variables. A specialization at a
    // point where both leading coefficients survive bounds deg_v(gcd) from
    // above, so a constant specialized gcd drops the problem to contents.
    for (unsigned salt = 0; salt < 4; ++salt) {
        int d = specialized_gcd_degree(f, g, v, salt);
        if (d == 0) return gcd(content_in(f, v), content_in(g, v));
        if (d > 0) break; // plausible common factor in v; compute it exactly
    }

    MultiPoly cf = content_in(f, v), cg = content_in(g, v);
    MultiPoly c = gcd(cf, cg);
    MultiPoly a = divide_exact(f, cf);
    MultiPoly b = divide_exact(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    // Primitive pseudo-remainder sequence.
    while (!b.is_zero()) {
        MultiPoly r = prem(a, b, v);
        if (!r.is_zero()) r = primitive_part_in(r, v);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.degree(v) <= 0) return c.monic(); // arguments were coprime in v
    return (c * primitive_part_in(a, v)).monic();
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    int m = f.degree(var), n = g.degree(var);
    if (f.is_zero() || g.is_zero()) return MultiPoly(f.vars());
    if (m <= 0 && n <= 0)
        throw precondition_error("resultant: both arguments are free of " + var);
    if (m <= 0) return f.pow(static_cast<unsigned>(n));
    if (n <= 0) return g.pow(static_cast<unsigned>(m));

    // Sylvester matrix, coefficients descending in var.
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size, MultiPoly(f.vars())));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
                f.coeff_of(var, static_cast<unsigned>(m - k));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] =
                g.coeff_of(var, static_cast<unsigned>(n - k));

    // Bareiss fraction-free elimination; every division below is exact.
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(GaussianRational(1));
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == size) return MultiPoly(f.vars()); // singular: resultant 0
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = MultiPoly(f.vars());
        }
        prev = M[k][k];
    }
    MultiPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
    int m = f.degree(var);
    if (m < 1) throw precondition_error("discriminant: degree in " + var + " must be at least 1");
    if (m == 1) return MultiPoly::constant(GaussianRational(1));
    MultiPoly res = resultant(f, f.derivative(var), var);
    MultiPoly d = divide_exact(res, f.lead_coeff_in(var));
    return (m % 4 == 2 || m % 4 == 3) ? -d : d; // (-1)^(m(m-1)/2)
}

MultiPoly squarefree_part_in(const MultiPoly& f, const std::string& var) {
    if (f.is_zero() || f.degree(var) <= 0) return f;
    MultiPoly c = content_in(f, var);
    MultiPoly p = divide_exact(f, c);
    MultiPoly s = divide_exact(p, gcd(p, p.derivative(var)));
    return c * s;
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) return f;
    if (f.is_constant()) return MultiPoly::constant(GaussianRational(1));
    MultiPoly g = f;
    for (const auto& v : used_vars(f)) g = gcd(g, f.derivative(v));
    return divide_exact(f, g).monic();
}

std::pair<std::vector<GaussianRational>, MultiPoly> exact_roots(const MultiPoly& f,
                                                                const std::string& var) {
    if (f.is_zero()) throw std::invalid_argument("exact_roots: zero polynomial");
    MultiPoly s = squarefree_part_in(f, var);
    int d = s.degree(var);
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1,
                                         GaussianRational(0));
    for (int k = 0; k <= d; ++k) {
        MultiPoly c = s.coeff_of(var, static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        if (!c.is_constant())
            throw std::invalid_argument("exact_roots: polynomial is not univariate in " + var);
        coeffs[static_cast<std::size_t>(k)] = c.constant_value();
    }

    std::vector<GaussianRational> roots;
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(GaussianRational(0));
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
    }
    auto rebuild = [&]() {
        MultiPoly rest = MultiPoly(std::vector<std::string>{var});
        MultiPoly x = MultiPoly::variable(var);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            rest += coeffs[k] * x.pow(static_cast<unsigned>(k));
        return rest.monic();
    };
    std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return {roots, MultiPoly::constant(GaussianRational(1))};
    if (deg == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return {roots, MultiPoly::constant(GaussianRational(1))};
    }
    if (deg == 2) {
        GaussianRational disc = coeffs[1] * coeffs[1] - GaussianRational(4) * coeffs[2] * coeffs[0];
        auto sq = sqrt_exact(disc);
        if (!sq) return {roots, rebuild()};
        GaussianRational half = GaussianRational(1) / (GaussianRational(2) * coeffs[2]);
        roots.push_back((-coeffs[1] + *sq) * half);
        if (!sq->is_zero()) roots.push_back((-coeffs[1] - *sq) * half);
        return {roots, MultiPoly::constant(GaussianRational(1))};
    }
    return {roots, rebuild()};
}

std::pair<std::map<std::string, unsigned>, MultiPoly> split_monomial_factors(const MultiPoly& f) {
    std::map<std::string, unsigned> exps;
    if (f.is_zero()) return {exps, f};
    const auto& vars = f.vars();
    std::vector<unsigned> mins(vars.size(), 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        first = false;
    }
    MultiPoly mono(vars);
    mono.add_term(mins, GaussianRational(1));
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (mins[i] > 0) exps[vars[i]] = mins[i];
    return {exps, divide_exact(f, mono)};
}

} // namespace holoweb
