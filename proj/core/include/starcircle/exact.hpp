#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace starcircle {

using Rational = mpq_class;
using BigInt = mpz_class;

inline BigInt factorial_int(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rational factorial(long n) { return Rational(factorial_int(n)); }

inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = q;
    bool inv = e < 0;
    if (inv) {
        if (base == 0) throw std::domain_error("rational_pow: zero to negative power");
        base = Rational(1) / base;
        e = -e;
    }
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// a + b*sqrt(2) with rational a, b.  sqrt2*sqrt2 folds into the rational part.
struct Root2 {
    Rational a{0};
    Rational b{0};

    Root2() = default;
    Root2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    explicit Root2(long v) : a(v), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    Root2 operator-() const { return {-a, -b}; }
    Root2 operator+(const Root2& o) const { return {a + o.a, b + o.b}; }
    Root2 operator-(const Root2& o) const { return {a - o.a, b - o.b}; }
    Root2 operator*(const Root2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    bool operator==(const Root2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Root2& o) const { return !(*this == o); }

    // (a + b√2)^-1 = (a - b√2)/(a² - 2b²); denominator vanishes only at 0 since √2 is irrational.
    Root2 inverse() const {
        Rational d = a * a - 2 * b * b;
        if (d == 0) throw std::domain_error("Root2::inverse of zero");
        return {a / d, -b / d};
    }

    double to_double() const { return a.get_d() + b.get_d() * 1.41421356237309504880168872420969808; }
};

// Element of Q(i, sqrt2): (re.a + re.b√2) + i(im.a + im.b√2).
struct ExactScalar {
    Root2 re;
    Root2 im;

    ExactScalar() = default;
    ExactScalar(Root2 r, Root2 i) : re(std::move(r)), im(std::move(i)) {}
    explicit ExactScalar(long v) : re(v), im(0) {}
    explicit ExactScalar(const Rational& q) : re(q, 0), im(0) {}

    static ExactScalar from_ratio(const Rational& q) { return ExactScalar(q); }
    static ExactScalar unit_i() { return {Root2(0), Root2(1)}; }
    static ExactScalar sqrt2() { return {Root2(Rational(0), Rational(1)), Root2(0)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_rational() const { return im.is_zero() && re.is_rational(); }

    ExactScalar operator-() const { return {-re, -im}; }
    ExactScalar operator+(const ExactScalar& o) const { return {re + o.re, im + o.im}; }
    ExactScalar operator-(const ExactScalar& o) const { return {re - o.re, im - o.im}; }
    ExactScalar operator*(const ExactScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ExactScalar& operator+=(const ExactScalar& o) { *this = *this + o; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { *this = *this - o; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { *this = *this * o; return *this; }
    bool operator==(const ExactScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    ExactScalar conj() const { return {re, -im}; }

    ExactScalar inverse() const {
        // 1/z = conj(z)/(z conj(z)); |z|² lives in Q(√2).
        Root2 n = re * re + im * im;
        Root2 ninv = n.inverse();
        ExactScalar c = conj();
        return {c.re * ninv, c.im * ninv};
    }

    ExactScalar scaled(const Rational& q) const {
        Root2 s(q, 0);
        return {re * s, im * s};
    }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ExactScalar operator*(const Rational& q, const ExactScalar& z) { return z.scaled(q); }

std::string to_string(const ExactScalar& z);

}  // namespace starcircle
