#pragma once

#include "polyqei/big_float.hpp"
#include "polyqei/green_kernel.hpp"
#include "polyqei/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polyqei {

// Nystrom discretization of the solution operator
//
//   (T f)(t) = integral_{-1}^{1} G(t,s) f(s) ds
//
// on Gauss-Legendre nodes, symmetrized by the sqrt-weight similarity
// A[a][b] = sqrt(w_a w_b) G(x_a, x_b) so a symmetric eigensolver applies.
// The kernel is centrosymmetric (G(-t,-s) = G(t,s)); with a symmetric node
// set the matrix therefore splits into even/odd half-size blocks
//
//   E[a][b] = sqrt(w_a w_b) (G(x_a, x_b) + G(x_a, -x_b)),
//   O[a][b] = sqrt(w_a w_b) (G(x_a, x_b) - G(x_a, -x_b)),   a,b < q/2,
//
// whose spectra together are exactly the spectrum of the full matrix. The
// split quarters the eigensolve cost and halves assembly; no ordering
// assumption is made between the blocks (their top values are merged).
//
// All matrix work runs in BigFloat at the ambient precision, raised to at
// least 128 bits for the duration of the call: at n = 20 the kernel entries
// are ~1e-35 while lambda1 ~ 1e-49, so doubles alone cannot certify even one
// digit of lambda2.

struct SpectralEstimate {
    unsigned n = 0;
    BigFloat lambda1;          // largest eigenvalue of T_n
    BigFloat lambda2;          // second largest
    unsigned quad_order = 0;   // final Gauss-Legendre order used
    double residual_estimate = 0.0;  // relative change of lambda1 on the last doubling
    std::vector<double> nodes;  // final quadrature grid (ascending)
    std::vector<double> u1;     // leading eigenfunction at the nodes, sup-normalized
};

// Thrown when the quadrature ladder hits its cap before two successive orders
// agree; carries the best estimate so far so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, SpectralEstimate best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const SpectralEstimate& best_estimate() const { return best_; }

private:
    SpectralEstimate best_;
};

// Top two eigenvalues of T_n. Starts at `quad_order` (>= 8n required; bumped
// to the next even value), doubles the order until lambda1 is stable to six
// significant figures between successive orders, and gives up past
// max(4096, 2 * start) with a ConvergenceError carrying the best estimate.
SpectralEstimate nystrom_eigs(unsigned n, unsigned quad_order);
SpectralEstimate nystrom_eigs(unsigned n);  // start at max(64, 8n)

// n * lambda2 / lambda1 — the rank-one-plus-decay diagnostic of the spectrum.
double rank1_ratio(unsigned n);

// Samples of (T_n f) on a uniform t-grid (includes the endpoints and, for odd
// sample_count, t = 0), computed by Gauss-Legendre quadrature in s.
// quad_order 0 selects max(128, 8n).
struct TransformSamples {
    std::vector<BigFloat> t;
    std::vector<BigFloat> value;
};
TransformSamples apply_T(unsigned n, const TPolynomial& f, unsigned sample_count = 201,
                         unsigned quad_order = 0);

// H_{d,h}(x) = [ integral_x^inf (dy/pi) y^d hhat(y)^2 ] / ||h||^2 for the
// trial function h = (1-t^2)^n. Default path: hhat(y) by direct oscillatory
// quadrature of 2 * integral_0^1 (1-t^2)^n cos(yt) dt, the y-integral by
// pi-wide Gauss-Legendre panels, and the truncated tail estimated from the
// asymptotic mean of the oscillation (|hhat| <= 2^{n+1} n! / y^{n+1}).
// points_per_panel 0 selects 24.
double empirical_H(unsigned d, unsigned n, double x, unsigned points_per_panel = 0);

// Fast path: same outer scheme with hhat through its spherical Bessel closed
// form hhat(y) = 2^{n+1} n! j_n(y) / y^n. Used to cross-check the default.
double empirical_H_fast(unsigned d, unsigned n, double x);

}  // namespace polyqei
