#pragma once

#include "polyqei/polynomial.hpp"
#include "polyqei/rational.hpp"

#include <vector>

namespace polyqei {

// Green's function of the clamped problem (-1)^n psi^(2n) = f on (-1,1),
// psi^(j)(+-1) = 0 for j = 0..n-1, in the split form
//
//   G(t,s) = Pc(t;s) + (-1)^n (t-s)^{2n-1}/(2n-1)! * [t >= s],
//
// where the correction polynomial Pc(t;s) = sum_{i<2n} a_i(s) t^i is fixed by
// the 2n clamped conditions (the fundamental-solution part vanishes
// identically at t = -1 and contributes its Taylor data at t = +1). Each
// a_i(s) is itself a polynomial of degree < 2n in s, so the whole kernel is
// held as one exact rational coefficient table:
//
//   poly_coeffs[i][m] = coefficient of t^i s^m in Pc.
//
// Construction solves a single 2n x 2n exact linear system with 2n right-hand
// sides (one per power of s); all boundary, smoothness and jump conditions
// then hold with identically zero residual, which the tests assert as hard
// rational equalities.
struct GreenKernel {
    unsigned n = 0;
    std::vector<std::vector<Rational>> poly_coeffs;  // (2n) x (2n)

    // Exact evaluation at rational points.
    Rational evaluate(const Rational& t, const Rational& s) const;

    // The degree-(2n-1) polynomial piece in t for fixed rational s:
    // left  = Pc(.;s)            (valid for t <= s),
    // right = Pc(.;s) + (-1)^n (t-s)^{2n-1}/(2n-1)!   (valid for t >= s).
    TPolynomial left_piece(const Rational& s) const;
    TPolynomial right_piece(const Rational& s) const;

    // Integral of G(t, .) over [-1, 1] as an exact polynomial in t; equals
    // (1-t^2)^n/(2n)! -- the image of the constant 1 under the solution
    // operator.
    TPolynomial integral_over_s() const;
};

GreenKernel build_green_kernel(unsigned n);

// Hard cap for kernel construction (exact tables stay modest up to here).
inline constexpr unsigned kGreenKernelMaxN = 24;

}  // namespace polyqei
