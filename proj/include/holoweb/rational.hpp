#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace holoweb {

// Gaussian rational: an element of Q(i) stored as two exact rationals.
// Values are always canonical (lowest terms, positive denominators);
// zero is 0 + 0i.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    explicit GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    static GaussianRational fraction(long num, long den) {
        if (den == 0) throw std::invalid_argument("fraction: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |q|^2 as an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Canonical literal: "0", "3", "-1/2", "i", "-i", "3/4*i", "1/2+3/4*i", "1/2-3/4*i".
    std::string str() const;

private:
    mpq_class re_, im_;
};

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> sqrt_exact(const mpq_class& q);

// Exact square root in Q(i), if one exists there.
std::optional<GaussianRational> sqrt_exact(const GaussianRational& q);

} // namespace holoweb
