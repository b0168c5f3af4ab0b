#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "starcircle/circle.hpp"
#include "starcircle/symbol.hpp"

namespace starcircle {

// Trusted momentum window (in the doubled index k = 2p).  A missing bound is
// unbounded; outside the window the stored coefficients make no exactness claim.
struct Window {
    std::optional<int64_t> lo;  // nullopt: trusted for all low k
    std::optional<int64_t> hi;  // nullopt: trusted for all high k

    static Window all() { return {}; }
    static Window below(int64_t h) { return {std::nullopt, h}; }
    static Window range(int64_t l, int64_t h) { return {l, h}; }
    static Window none() { return {1, 0}; }

    bool is_all() const { return !lo && !hi; }
    bool is_empty() const { return lo && hi && *lo > *hi; }
    bool contains(int64_t k) const {
        if (lo && k < *lo) return false;
        if (hi && k > *hi) return false;
        return true;
    }
    Window intersect(const Window& o) const {
        Window w;
        if (lo || o.lo) w.lo = std::max(lo.value_or(INT64_MIN), o.lo.value_or(INT64_MIN));
        if (hi || o.hi) w.hi = std::min(hi.value_or(INT64_MAX), o.hi.value_or(INT64_MAX));
        return w;
    }
    Window shifted(int64_t lo_add, int64_t hi_add) const {
        Window w;
        if (lo) w.lo = *lo + lo_add;
        if (hi) w.hi = *hi + hi_add;
        return w;
    }
    bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
};

template <class C>
struct TraceResult {
    C value;
    bool window_complete;
};

// Sparse function on the lattice S^1 x Z/2: terms c_{m,k} e^{imx} δ_{2p,k}.
template <class C>
class LatticeFunction {
  public:
    using Traits = CoeffTraits<C>;
    struct Key {
        int64_t k;  // doubled momentum 2p
        int64_t m;  // Fourier mode
        bool operator<(const Key& o) const { return k != o.k ? k < o.k : m < o.m; }
        bool operator==(const Key& o) const { return k == o.k && m == o.m; }
    };
    using TermMap = std::map<Key, C>;

    LatticeFunction() = default;

    static LatticeFunction zero() { return {}; }

    // δ_{2p,k} times e^{imx}
    static LatticeFunction delta(int64_t m, int64_t k, C c) {
        LatticeFunction f;
        f.add(m, k, c);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Window& window() const { return win_; }
    void set_window(Window w) { win_ = w; }

    C coeff(int64_t m, int64_t k) const {
        auto it = terms_.find({k, m});
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void add(int64_t m, int64_t k, const C& c) {
        Traits::validate(c);
        auto it = terms_.find({k, m});
        if (it == terms_.end()) {
            if (!Traits::is_zero(c)) terms_.emplace(Key{k, m}, c);
        } else {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    // The row k as a function of x.
    CircleFunction<C> row(int64_t k) const {
        CircleFunction<C> r;
        auto it = terms_.lower_bound({k, INT64_MIN});
        for (; it != terms_.end() && it->first.k == k; ++it) r.add(it->first.m, it->second);
        return r;
    }

    void set_row(int64_t k, const CircleFunction<C>& f) {
        for (auto& [m, c] : f.terms()) add(m, k, c);
    }

    std::vector<int64_t> rows() const {
        std::vector<int64_t> ks;
        for (auto& [key, c] : terms_)
            if (ks.empty() || ks.back() != key.k) ks.push_back(key.k);
        return ks;
    }

    int64_t min_row() const { return terms_.empty() ? 0 : terms_.begin()->first.k; }
    int64_t max_row() const { return terms_.empty() ? 0 : terms_.rbegin()->first.k; }

    int64_t min_mode() const {
        int64_t v = 0;
        bool first = true;
        for (auto& [key, c] : terms_) v = first ? (first = false, key.m) : std::min(v, key.m);
        return v;
    }
    int64_t max_mode() const {
        int64_t v = 0;
        bool first = true;
        for (auto& [key, c] : terms_) v = first ? (first = false, key.m) : std::max(v, key.m);
        return v;
    }
    int64_t max_abs_mode() const {
        int64_t v = 0;
        for (auto& [key, c] : terms_) v = std::max(v, std::abs(key.m));
        return v;
    }

    LatticeFunction operator+(const LatticeFunction& o) const {
        LatticeFunction r = *this;
        for (auto& [key, c] : o.terms_) r.add(key.m, key.k, c);
        r.win_ = win_.intersect(o.win_);
        return r;
    }
    LatticeFunction operator-(const LatticeFunction& o) const {
        LatticeFunction r = *this;
        for (auto& [key, c] : o.terms_) r.add(key.m, key.k, -c);
        r.win_ = win_.intersect(o.win_);
        return r;
    }
    LatticeFunction scaled(const C& s) const {
        LatticeFunction r;
        r.win_ = win_;
        for (auto& [key, c] : terms_) r.add(key.m, key.k, c * s);
        return r;
    }
    LatticeFunction scaled_ratio(const Rational& q) const {
        LatticeFunction r;
        r.win_ = win_;
        for (auto& [key, c] : terms_) r.add(key.m, key.k, Traits::mul_ratio(c, q));
        return r;
    }

    // Complex conjugation: coefficient conjugated, m -> -m, k unchanged.
    LatticeFunction conjugate() const {
        LatticeFunction r;
        r.win_ = win_;
        for (auto& [key, c] : terms_) r.add(-key.m, key.k, Traits::conj(c));
        return r;
    }

    // Reality test: c_{-m,k} == conj(c_{m,k}) for all stored terms.
    bool is_real() const {
        for (auto& [key, c] : terms_) {
            if (!(coeff(-key.m, key.k) == Traits::conj(c))) return false;
        }
        return true;
    }

    // Drop rows above hi (window untouched by default).
    LatticeFunction rows_below(int64_t hi) const {
        LatticeFunction r;
        r.win_ = win_;
        for (auto& [key, c] : terms_)
            if (key.k <= hi) r.add(key.m, key.k, c);
        return r;
    }

    // Σ_k c_{0,k} over the trusted window; complete iff fully exact.
    TraceResult<C> phase_trace() const {
        C s = Traits::zero();
        for (auto& [key, c] : terms_)
            if (key.m == 0 && win_.contains(key.k)) s = s + c;
        return {s, win_.is_all()};
    }

    Complex eval_point(double x, int64_t k) const {
        if (!win_.contains(k)) throw std::out_of_range("eval_point: k outside trusted window");
        return row(k).eval(x);
    }

    LatticeFunction<Complex> to_float() const {
        LatticeFunction<Complex> r;
        r.set_window(win_);
        for (auto& [key, c] : terms_) r.add(key.m, key.k, Traits::to_complex(c));
        return r;
    }

  private:
    TermMap terms_;
    Window win_ = Window::all();
};

using ExactLattice = LatticeFunction<ExactScalar>;
using FloatLattice = LatticeFunction<Complex>;

// Wigner transform of a bilinear pair:
// (1/2pi) ∫ ψ(x−y) φ(x+y) e^{2iyp} dy = Σ_{j,l} a_j b_l e^{i(j+l)x} δ_{2p, j−l}.
template <class C>
LatticeFunction<C> wigner_transform(const CircleFunction<C>& psi, const CircleFunction<C>& phi) {
    LatticeFunction<C> f;
    for (auto& [j, a] : psi.terms())
        for (auto& [l, b] : phi.terms()) f.add(j + l, j - l, a * b);
    return f;
}

namespace detail {

// Trust window of a star product.  When one operand is fully exact (window Z,
// finite stored support) the other operand's window shrinks by the exact
// operand's stored mode extremes; otherwise the conservative symmetric rule
// applies (shrink both ends by the max |m| over both operands).
template <class C>
Window star_window(const LatticeFunction<C>& f, const LatticeFunction<C>& g) {
    if (f.empty() || g.empty()) return Window::all();
    bool fa = f.window().is_all();
    bool ga = g.window().is_all();
    if (fa && ga) return Window::all();
    if (ga) return f.window().shifted(-g.min_mode(), -g.max_mode());
    if (fa) return g.window().shifted(f.max_mode(), f.min_mode());
    int64_t m = std::max(f.max_abs_mode(), g.max_abs_mode());
    return f.window().intersect(g.window()).shifted(m, -m);
}

}  // namespace detail

// Groenewold star product.  Basis rule:
// (e^{imx} δ_{2p,k}) ★ (e^{im'x} δ_{2p,k'}) = e^{i(m+m')x} δ_{2p,k'+m}  iff  k − m' = k' + m.
template <class C>
LatticeFunction<C> star(const LatticeFunction<C>& f, const LatticeFunction<C>& g) {
    LatticeFunction<C> out;
    out.set_window(detail::star_window(f, g));
    for (auto& [kf, cf] : f.terms())
        for (auto& [kg, cg] : g.terms())
            if (kf.k - kg.m == kg.k + kf.m) out.add(kf.m + kg.m, kg.k + kf.m, cf * cg);
    return out;
}

// Star with the sign-flipped deformation parameter.
template <class C>
LatticeFunction<C> star_bar(const LatticeFunction<C>& f, const LatticeFunction<C>& g) {
    return star(f.conjugate(), g.conjugate()).conjugate();
}

namespace detail {
// ((num)/2)^d applied to a coefficient, exactly.
template <class C>
C momentum_power(const C& c, int64_t num, int d) {
    if (d == 0) return c;
    return CoeffTraits<C>::mul_ratio(c, rational_pow(Rational(num, 2), d));
}
}  // namespace detail

// (c e^{imx} p^d) ★ f:  term rule  c c' ((k'+m+m')/2)^d e^{i(m+m')x} δ_{2p,k'+m}.
template <class C>
LatticeFunction<C> star_symbol_left(const Symbol<C>& s, const LatticeFunction<C>& f) {
    LatticeFunction<C> out;
    out.set_window(f.window().shifted(s.max_mode(), s.min_mode()));
    for (auto& t : s.terms)
        for (auto& [key, c] : f.terms()) {
            C v = detail::momentum_power(t.c * c, key.k + t.m + key.m, t.d);
            out.add(t.m + key.m, key.k + t.m, v);
        }
    return out;
}

// f ★ (c e^{imx} p^d):  mirror rule  c c' ((k'−m−m')/2)^d e^{i(m+m')x} δ_{2p,k'−m}.
template <class C>
LatticeFunction<C> star_symbol_right(const LatticeFunction<C>& f, const Symbol<C>& s) {
    LatticeFunction<C> out;
    out.set_window(f.window().shifted(-s.min_mode(), -s.max_mode()));
    for (auto& t : s.terms)
        for (auto& [key, c] : f.terms()) {
            C v = detail::momentum_power(t.c * c, key.k - t.m - key.m, t.d);
            out.add(t.m + key.m, key.k - t.m, v);
        }
    return out;
}

// Ordinary product: Kronecker match in k, convolution in m.
template <class C>
LatticeFunction<C> pointwise_mul(const LatticeFunction<C>& f, const LatticeFunction<C>& g) {
    LatticeFunction<C> out;
    bool fa = f.window().is_all();
    bool ga = g.window().is_all();
    auto rows_inside = [](const LatticeFunction<C>& ex, const Window& w) {
        for (auto& [key, c] : ex.terms())
            if (!w.contains(key.k)) return false;
        return true;
    };
    if (fa && ga)
        out.set_window(Window::all());
    else if (ga && rows_inside(g, f.window()))
        out.set_window(Window::all());
    else if (fa && rows_inside(f, g.window()))
        out.set_window(Window::all());
    else
        out.set_window(f.window().intersect(g.window()));
    for (auto& [kf, cf] : f.terms()) {
        for (auto& [kg, cg] : g.terms()) {
            if (kf.k != kg.k) continue;
            out.add(kf.m + kg.m, kf.k, cf * cg);
        }
    }
    return out;
}

// [s, f] under the sesquilinear product ⊛ = ★K:  s★conj(f) − f★conj(s).
template <class C>
LatticeFunction<C> sesqui_bracket(const Symbol<C>& s, const LatticeFunction<C>& f) {
    return star_symbol_left(s, f.conjugate()) - star_symbol_right(f, s.conjugate());
}

// Max |coefficient| over the trusted window (float diagnostics).
template <class C>
double max_abs_within(const LatticeFunction<C>& f, const Window& w) {
    double v = 0.0;
    for (auto& [key, c] : f.terms())
        if (w.contains(key.k)) v = std::max(v, std::abs(CoeffTraits<C>::to_complex(c)));
    return v;
}

template <class C>
double max_abs_within(const LatticeFunction<C>& f) {
    return max_abs_within(f, f.window());
}

// Exact comparison of stored terms restricted to a window (both directions).
template <class C>
bool equal_within(const LatticeFunction<C>& a, const LatticeFunction<C>& b, const Window& w) {
    for (auto& [key, c] : a.terms())
        if (w.contains(key.k) && !(b.coeff(key.m, key.k) == c)) return false;
    for (auto& [key, c] : b.terms())
        if (w.contains(key.k) && !(a.coeff(key.m, key.k) == c)) return false;
    return true;
}

template <class C>
double max_diff_within(const LatticeFunction<C>& a, const LatticeFunction<C>& b, const Window& w) {
    return max_abs_within(a - b, w);
}

}  // namespace starcircle
