#include "holoweb/rational.hpp"

namespace holoweb {

namespace {

std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

// Prints b*i with the conventions "i", "-i", "3*i", "-2/5*i".
std::string imag_str(const mpq_class& b) {
    if (b == 1) return "i";
    if (b == -1) return "-i";
    return rat_str(b) + "*i";
}

} // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string tail = imag_str(im_);
    if (tail[0] != '-') tail = "+" + tail;
    return rat_str(re_) + tail;
}

std::optional<mpq_class> sqrt_exact(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    // Canonical mpq has coprime num/den with den > 0, so it is a square
    // exactly when both parts are.
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rnum, rden);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> sqrt_exact(const GaussianRational& q) {
    const mpq_class& a = q.re();
    const mpq_class& b = q.im();
    if (b == 0) {
        if (a >= 0) {
            auto r = sqrt_exact(a);
            if (!r) return std::nullopt;
            return GaussianRational(*r);
        }
        auto r = sqrt_exact(mpq_class(-a));
        if (!r) return std::nullopt;
        return GaussianRational(mpq_class(0), *r); // sqrt(-m) = sqrt(m)*i
    }
    // (c + d i)^2 = a + b i needs c^2 - d^2 = a, 2cd = b. With r = |a+bi|
    // this forces c^2 = (a + r)/2, and both r and c must be rational.
    auto r = sqrt_exact(mpq_class(a * a + b * b));
    if (!r) return std::nullopt;
    auto c = sqrt_exact(mpq_class((a + *r) / 2));
    if (!c || *c == 0) return std::nullopt; // c = 0 would mean b = 0
    mpq_class d = b / (2 * (*c));
    return GaussianRational(*c, d);
}

} // namespace holoweb
