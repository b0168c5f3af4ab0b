#pragma once

#include <cmath>
#include <stdexcept>

#include "starcircle/circle.hpp"

namespace starcircle {

// Modified Bessel I_n by ascending series; series regime |arg| <= 30.
double bessel_i(long order, double arg);

// p! * sum_{k=0}^{p} z^k / k!  for a finite Fourier series z.
// Polynomial restatement of e^{-z} Γ(p+1, z); exact when z is.
template <class C>
CircleFunction<C> incomplete_gamma_poly(long p, const CircleFunction<C>& z) {
    if (p < 0) throw std::domain_error("incomplete_gamma_poly: p must be nonnegative");
    CircleFunction<C> sum = CircleFunction<C>::constant(CoeffTraits<C>::one());
    CircleFunction<C> zpow = sum;
    for (long k = 1; k <= p; ++k) {
        zpow = zpow * z;
        sum = sum + zpow.scaled_ratio(Rational(1) / factorial(k));
    }
    return sum.scaled_ratio(factorial(p));
}

}  // namespace starcircle
