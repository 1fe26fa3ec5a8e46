#include "cedrf/rd_math.hpp"

#include <cmath>
#include <stdexcept>

namespace cedrf {

double binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::domain_error("binary_entropy: argument must be a probability in [0, 1]");
    if (q == 0.0 || q == 1.0)
        return 0.0;
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double inv_binary_entropy(double h) {
    if (!(h >= 0.0 && h <= 1.0))
        throw std::domain_error("inv_binary_entropy: argument must be in [0, 1]");
    if (h == 0.0)
        return 0.0;
    if (h == 1.0)
        return 0.5;
    // h is strictly increasing on [0, 1/2]; 80 halvings leave an interval
    // of width 0.5 * 2^-80, far below the 1e-12 contract.
    double lo = 0.0;
    double hi = 0.5;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < h)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double star(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0))
        throw std::domain_error("star: both arguments must be probabilities in [0, 1]");
    return a + b - 2.0 * a * b;
}

double q_function(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("q_function: argument must be finite");
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double log2_plus(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log2_plus: argument must be positive");
    const double v = std::log2(x);
    return v > 0.0 ? v : 0.0;
}

} // namespace cedrf
