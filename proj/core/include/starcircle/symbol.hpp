#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "starcircle/coeff.hpp"

namespace starcircle {

// Finite sum of terms c * e^{imx} * p^d.  Momentum degree d <= 4.
template <class C>
struct Symbol {
    struct Term {
        int64_t m;
        int d;
        C c;
    };
    std::vector<Term> terms;

    void add(int64_t m, int d, const C& c) {
        if (d < 0 || d > 4) throw std::domain_error("Symbol: momentum degree out of range");
        CoeffTraits<C>::validate(c);
        if (!CoeffTraits<C>::is_zero(c)) terms.push_back({m, d, c});
    }

    Symbol conjugate() const {
        Symbol s;
        for (auto& t : terms) s.add(-t.m, t.d, CoeffTraits<C>::conj(t.c));
        return s;
    }

    int64_t min_mode() const {
        int64_t v = 0;
        for (auto& t : terms) v = std::min(v, t.m);
        return v;
    }
    int64_t max_mode() const {
        int64_t v = 0;
        for (auto& t : terms) v = std::max(v, t.m);
        return v;
    }
};

// p^2
template <class C>
Symbol<C> momentum_squared() {
    Symbol<C> s;
    s.add(0, 2, CoeffTraits<C>::one());
    return s;
}

// H = p^2 + m^2 e^{2ix}; coupling enters squared.
template <class C>
Symbol<C> liouville_hamiltonian(const Rational& coupling = Rational(1)) {
    Symbol<C> s;
    s.add(0, 2, CoeffTraits<C>::one());
    s.add(2, 0, CoeffTraits<C>::from_ratio(coupling * coupling));
    return s;
}

template <class C>
Symbol<C> liouville_hamiltonian_bar(const Rational& coupling = Rational(1)) {
    return liouville_hamiltonian<C>(coupling).conjugate();
}

}  // namespace starcircle
