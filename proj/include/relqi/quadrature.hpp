#pragma once
// Gauss-Legendre nodes and weights on an arbitrary interval, computed by
// Newton iteration on the Legendre recurrence.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace relqi {

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending in [a, b]
    std::vector<double> weights;

    GaussLegendreRule(std::size_t n, double a, double b) : nodes(n), weights(n) {
        if (n == 0) throw std::invalid_argument("GaussLegendreRule: need at least one node");
        if (!(a < b)) throw std::invalid_argument("GaussLegendreRule: need a < b");
        const double xm = 0.5 * (b + a);
        const double xl = 0.5 * (b - a);
        const std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i < half; ++i) {
            // Chebyshev estimate of the i-th root, then Newton on P_n.
            double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(n) + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0;
                double p2 = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * static_cast<double>(j) + 1.0) * z * p2 -
                          static_cast<double>(j) * p3) /
                         (static_cast<double>(j) + 1.0);
                }
                pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
                const double z1 = z;
                z = z1 - p1 / pp;
                if (std::abs(z - z1) < 1e-15) break;
            }
            nodes[i] = xm - xl * z;
            nodes[n - 1 - i] = xm + xl * z;
            weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
            weights[n - 1 - i] = weights[i];
        }
    }
};

template <typename F>
inline double integrate(const GaussLegendreRule& rule, F&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

}  // namespace relqi
