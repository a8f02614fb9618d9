#pragma once

namespace polyqei {

// Floating-point special functions used by the optimizer, the cylinder series
// and the Q_d normalization integral. All are plain double paths; the exact
// rational algebra never routes through here.

double ln_gamma(double x);  // x > 0
double digamma(double x);   // x > 0
double trigamma(double x);  // x > 0

// Modified Bessel K of integer order 0, 1 or 2. K2 is obtained from the
// recurrence K2(x) = K0(x) + 2 K1(x)/x when asked for directly.
double bessel_k(int order, double x);

// log K2(x), valid for all x > 0 including the regime where K2 itself
// underflows double (x >~ 700). For x >= 50 uses the large-argument expansion
//   K2(x) = sqrt(pi/(2x)) e^{-x} [1 + 15/(8x) + 105/(128 x^2) + ...],
// elsewhere log of the direct evaluation; the two branches agree to ~1e-14
// at the switch.
double log_bessel_k2(double x);

// Q_d(x) = (d/x^d) * Integral_1^x y^2 (y^2-1)^{(d-3)/2} dy for integer d >= 2,
// x >= 1. The substitution y = cosh(u) turns the integrand into
// cosh^2(u) sinh^{d-2}(u), analytic for every d >= 2, and adaptive
// Gauss-Kronrod takes it to 1e-10 absolute accuracy.
struct QdValue {
    int d = 0;
    double x = 0.0;
    double value = 0.0;
};
QdValue q_d(int d, double x);

}  // namespace polyqei
