#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "starcircle/exact.hpp"

namespace starcircle {

using Complex = std::complex<double>;

// Coefficient ring interface used by all lattice/circle algebra.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<ExactScalar> {
    static constexpr bool exact = true;
    static ExactScalar zero() { return ExactScalar(0L); }
    static ExactScalar one() { return ExactScalar(1L); }
    static bool is_zero(const ExactScalar& c) { return c.is_zero(); }
    static ExactScalar conj(const ExactScalar& c) { return c.conj(); }
    static ExactScalar from_ratio(const Rational& q) { return ExactScalar(q); }
    static ExactScalar mul_ratio(const ExactScalar& c, const Rational& q) { return c.scaled(q); }
    static Complex to_complex(const ExactScalar& c) { return c.to_complex(); }
    static void validate(const ExactScalar&) {}
};

template <>
struct CoeffTraits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
    static Complex conj(const Complex& c) { return std::conj(c); }
    static Complex from_ratio(const Rational& q) { return {q.get_d(), 0.0}; }
    static Complex mul_ratio(const Complex& c, const Rational& q) { return c * q.get_d(); }
    static Complex to_complex(const Complex& c) { return c; }
    static void validate(const Complex& c) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("non-finite float coefficient");
    }
};

// Finite float scalar; construction rejects NaN/Inf.
inline Complex float_scalar(double re, double im = 0.0) {
    Complex c{re, im};
    CoeffTraits<Complex>::validate(c);
    return c;
}

}  // namespace starcircle
