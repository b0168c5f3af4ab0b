#include "starcircle/special.hpp"

#include <sstream>

namespace starcircle {

double bessel_i(long order, double arg) {
    if (order < 0) throw std::domain_error("bessel_i: order must be nonnegative");
    if (!(std::abs(arg) <= 30.0)) throw std::domain_error("bessel_i: |arg| > 30 outside series regime");
    // I_n(a) = sum_k (a/2)^{n+2k} / (k! (n+k)!)
    double half = arg / 2.0;
    double term = 1.0;
    for (long j = 1; j <= order; ++j) term *= half / static_cast<double>(j);
    double sum = term;
    for (long k = 1; k < 400; ++k) {
        term *= half * half / (static_cast<double>(k) * static_cast<double>(k + order));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

std::string to_string(const ExactScalar& z) {
    auto root2_str = [](const Root2& r) {
        std::ostringstream os;
        if (r.b == 0) {
            os << r.a.get_str();
        } else {
            os << r.a.get_str() << (r.b > 0 ? "+" : "") << r.b.get_str() << "*sqrt2";
        }
        return os.str();
    };
    std::ostringstream os;
    if (z.im.is_zero()) {
        os << root2_str(z.re);
    } else {
        os << "(" << root2_str(z.re) << ")+(" << root2_str(z.im) << ")i";
    }
    return os.str();
}

}  // namespace starcircle
