#pragma once

#include <cstdint>
#include <map>
#include <numbers>

#include "starcircle/coeff.hpp"

namespace starcircle {

// Finite Fourier series  sum_m a_m e^{imx}  on the circle.
template <class C>
class CircleFunction {
  public:
    using Traits = CoeffTraits<C>;
    using TermMap = std::map<int64_t, C>;

    CircleFunction() = default;

    static CircleFunction constant(C c) {
        CircleFunction f;
        f.add(0, c);
        return f;
    }
    static CircleFunction mode(int64_t m, C c) {
        CircleFunction f;
        f.add(m, c);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coeff(int64_t m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void add(int64_t m, const C& c) {
        Traits::validate(c);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!Traits::is_zero(c)) terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    CircleFunction operator+(const CircleFunction& o) const {
        CircleFunction r = *this;
        for (auto& [m, c] : o.terms_) r.add(m, c);
        return r;
    }
    CircleFunction operator-(const CircleFunction& o) const {
        CircleFunction r = *this;
        for (auto& [m, c] : o.terms_) r.add(m, -c);
        return r;
    }
    CircleFunction operator*(const CircleFunction& o) const {
        CircleFunction r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add(m1 + m2, c1 * c2);
        return r;
    }
    CircleFunction scaled(const C& s) const {
        CircleFunction r;
        for (auto& [m, c] : terms_) r.add(m, c * s);
        return r;
    }
    CircleFunction scaled_ratio(const Rational& q) const {
        CircleFunction r;
        for (auto& [m, c] : terms_) r.add(m, Traits::mul_ratio(c, q));
        return r;
    }

    bool operator==(const CircleFunction& o) const { return terms_ == o.terms_; }
    bool operator!=(const CircleFunction& o) const { return !(*this == o); }

    // conj(f)(x): modes negate, coefficients conjugate.
    CircleFunction conjugate() const {
        CircleFunction r;
        for (auto& [m, c] : terms_) r.add(-m, Traits::conj(c));
        return r;
    }

    // multiplication by e^{iqx}
    CircleFunction mode_shifted(int64_t q) const {
        CircleFunction r;
        for (auto& [m, c] : terms_) r.add(m + q, c);
        return r;
    }

    // -d^2/dx^2: term m picks up m^2
    CircleFunction neg_second_derivative() const {
        CircleFunction r;
        for (auto& [m, c] : terms_) r.add(m, Traits::mul_ratio(c, Rational(m * m)));
        return r;
    }

    // (1/2pi) ∫ f(x) g(x) dx  — no conjugation
    C inner(const CircleFunction& o) const {
        C s = Traits::zero();
        for (auto& [m, c] : terms_) {
            auto it = o.terms_.find(-m);
            if (it != o.terms_.end()) s = s + c * it->second;
        }
        return s;
    }

    int64_t min_mode() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int64_t max_mode() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Complex eval(double x) const {
        Complex s{0.0, 0.0};
        for (auto& [m, c] : terms_) {
            double ph = static_cast<double>(m) * x;
            s += Traits::to_complex(c) * Complex{std::cos(ph), std::sin(ph)};
        }
        return s;
    }

    CircleFunction<Complex> to_float() const {
        CircleFunction<Complex> r;
        for (auto& [m, c] : terms_) r.add(m, Traits::to_complex(c));
        return r;
    }

  private:
    TermMap terms_;
};

using ExactCircle = CircleFunction<ExactScalar>;
using FloatCircle = CircleFunction<Complex>;

// cos(qx) and sin(qx) with exact coefficients
inline ExactCircle exact_cos(int64_t q) {
    ExactCircle f;
    ExactScalar half(Rational(1, 2));
    f.add(q, half);
    f.add(-q, half);
    return f;
}

inline ExactCircle exact_sin(int64_t q) {
    ExactCircle f;
    ExactScalar hi = ExactScalar(Rational(1, 2)) * ExactScalar::unit_i();
    f.add(q, -hi);
    f.add(-q, hi);
    return f;
}

}  // namespace starcircle
