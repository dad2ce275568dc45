#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdlib>
#include <string>

#include "lgtk/errors.hpp"

namespace lgtk {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Element of Q(i), kept exact. All coefficient arithmetic in the toolkit
// runs through this type; nothing is ever rounded.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |z|^2 = z * conj(z), a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

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
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw Error(errc::internal, "division by zero in Q(i)");
        Rational n = o.norm();
        GaussianRational c = o.conj();
        *this *= c;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order used only for canonical sorting, not for magnitude.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussianRational pow(unsigned long e) const {
        GaussianRational acc(1);
        GaussianRational base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // "3", "-1/2", "i", "-i", "2*i", "(1/2-3/4*i)"; chosen so the output is
    // re-parseable by the coefficient grammar.
    std::string str() const {
        if (im_ == 0) return re_.str();
        if (re_ == 0) {
            if (im_ == 1) return "i";
            if (im_ == -1) return "-i";
            return im_.str() + "*i";
        }
        std::string s = "(" + re_.str();
        if (im_ > 0)
            s += "+" + im_.str() + "*i";
        else
            s += "-" + Rational(-im_).str() + "*i";
        return s + ")";
    }

private:
    Rational re_, im_;
};

// i^d for the dimension-dependent prefactors.
inline GaussianRational i_power(long d) {
    long r = ((d % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

inline Rational factorial_rational(long n) {
    Rational r(1);
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace lgtk
