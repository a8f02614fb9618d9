#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polyqei {

template <typename Real>
struct QuadratureRule {
    std::vector<Real> nodes;    // ascending in (-1, 1), antisymmetric
    std::vector<Real> weights;  // positive, symmetric, summing to 2
};

// Gauss-Legendre rule of arbitrary order q at the working precision of Real.
// Nodes are the roots of P_q found by Newton iteration on the three-term
// recurrence, seeded with the Chebyshev-like estimate cos(pi (i+3/4)/(q+1/2));
// the seed is accurate to O(q^{-2}) and Newton converges quadratically, so a
// few dozen iterations cover even 256-bit targets. Weights are
// 2 / ((1-x^2) P_q'(x)^2). Fully deterministic for a given precision.
template <typename Real>
QuadratureRule<Real> gauss_legendre(std::size_t q) {
    using std::abs;
    using std::atan;
    using std::cos;
    if (q < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
    QuadratureRule<Real> rule;
    rule.nodes.assign(q, Real(0));
    rule.weights.assign(q, Real(0));

    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real pi = Real(4) * atan(Real(1));
    const std::size_t half = (q + 1) / 2;

    for (std::size_t i = 0; i < half; ++i) {
        Real x = cos(pi * (Real(static_cast<double>(i)) + Real(0.75)) /
                     (Real(static_cast<double>(q)) + Real(0.5)));
        Real dp = 0;
        for (int iter = 0; iter < 200; ++iter) {
            // P_{k}(x) via the recurrence; dp = P_q'(x) from the derivative identity.
            Real p0 = 1, p1 = x;
            for (std::size_t k = 2; k <= q; ++k) {
                Real pk = ((Real(2 * static_cast<double>(k) - 1) * x * p1) -
                           Real(static_cast<double>(k) - 1) * p0) /
                          Real(static_cast<double>(k));
                p0 = p1;
                p1 = pk;
            }
            dp = Real(static_cast<double>(q)) * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= eps * Real(4) * abs(x) + eps) break;
        }
        // One clean derivative evaluation at the converged node.
        Real p0 = 1, p1 = x;
        for (std::size_t k = 2; k <= q; ++k) {
            Real pk = ((Real(2 * static_cast<double>(k) - 1) * x * p1) -
                       Real(static_cast<double>(k) - 1) * p0) /
                      Real(static_cast<double>(k));
            p0 = p1;
            p1 = pk;
        }
        dp = Real(static_cast<double>(q)) * (x * p1 - p0) / (x * x - 1);

        Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
        rule.nodes[i] = -x;  // seeds start near +1 and descend; store ascending
        rule.nodes[q - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[q - 1 - i] = w;
    }
    if (q % 2) rule.nodes[q / 2] = Real(0);
    return rule;
}

}  // namespace polyqei
