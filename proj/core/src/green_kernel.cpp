#include "polyqei/green_kernel.hpp"

#include "polyqei/linear_solve.hpp"

#include <stdexcept>

namespace polyqei {

namespace {

// Falling factorial i (i-1) ... (i-j+1): the coefficient picked up by the
// j-th derivative of t^i.
Integer falling_factorial(unsigned i, unsigned j) {
    Integer r = 1;
    for (unsigned k = 0; k < j; ++k) r *= Integer(i - k);
    return r;
}

}  // namespace

GreenKernel build_green_kernel(unsigned n) {
    if (n < 1 || n > kGreenKernelMaxN)
        throw std::domain_error("build_green_kernel: order n out of supported range");

    const unsigned dim = 2 * n;
    const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);

    // Conditions on the correction polynomial Pc(t;s) = sum_i a_i(s) t^i.
    // The fundamental piece F(t,s) = (-1)^n (t-s)^{2n-1}/(2n-1)! [t >= s]
    // vanishes with all derivatives at t = -1 (it is switched off there), so
    //
    //   d^j/dt^j Pc |_{t=-1} = 0,
    //   d^j/dt^j Pc |_{t=+1} = - d^j/dt^j F |_{t=+1},     j = 0..n-1.
    //
    // Row layout: j-th row is the condition at t=-1, row n+j at t=+1.
    RationalMatrix lhs(dim, RationalVector(dim, Rational(0)));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = j; i < dim; ++i) {
            Rational fall(falling_factorial(i, j));
            lhs[j][i] = ((i - j) % 2 == 0) ? fall : -fall;  // t^(i-j) at t=-1
            lhs[n + j][i] = fall;                           // t^(i-j) at t=+1
        }
    }

    // One right-hand side per power of s. d^j/dt^j F |_{t=1} =
    // (-1)^n (1-s)^{2n-1-j}/(2n-1-j)!; expanding (1-s)^q in powers of s gives
    // the m-th column entries.
    std::vector<RationalVector> rhs(dim, RationalVector(dim, Rational(0)));
    for (unsigned j = 0; j < n; ++j) {
        const unsigned q = dim - 1 - j;
        const Integer qfact = factorial_exact(q);
        for (unsigned m = 0; m <= q; ++m) {
            Rational entry(binomial_exact(q, m), qfact);
            if (m % 2 == 1) entry = -entry;
            rhs[m][n + j] = -sign_n * entry;
        }
    }

    auto cols = solve_linear_exact_multi(std::move(lhs), std::move(rhs));

    GreenKernel g;
    g.n = n;
    g.poly_coeffs.assign(dim, std::vector<Rational>(dim, Rational(0)));
    for (unsigned m = 0; m < dim; ++m)
        for (unsigned i = 0; i < dim; ++i) g.poly_coeffs[i][m] = cols[m][i];
    return g;
}

Rational GreenKernel::evaluate(const Rational& t, const Rational& s) const {
    const unsigned dim = 2 * n;
    // Horner in t of Horner in s.
    Rational acc = 0;
    for (unsigned i = dim; i-- > 0;) {
        Rational row = 0;
        for (unsigned m = dim; m-- > 0;) row = row * s + poly_coeffs[i][m];
        acc = acc * t + row;
    }
    if (t >= s) {
        Rational diff_pow = 1;
        const Rational diff = t - s;
        for (unsigned k = 0; k < dim - 1; ++k) diff_pow *= diff;
        Rational fund = diff_pow / Rational(factorial_exact(dim - 1));
        acc += (n % 2 == 0) ? fund : -fund;
    }
    return acc;
}

TPolynomial GreenKernel::left_piece(const Rational& s) const {
    const unsigned dim = 2 * n;
    std::vector<Rational> c(dim, Rational(0));
    for (unsigned i = 0; i < dim; ++i) {
        Rational row = 0;
        for (unsigned m = dim; m-- > 0;) row = row * s + poly_coeffs[i][m];
        c[i] = row;
    }
    return TPolynomial(std::move(c));
}

TPolynomial GreenKernel::right_piece(const Rational& s) const {
    const unsigned dim = 2 * n;
    TPolynomial p = left_piece(s);
    // (-1)^n (t-s)^{2n-1}/(2n-1)! expanded in powers of t.
    std::vector<Rational> f(dim, Rational(0));
    const Rational inv_fact(Integer(1), factorial_exact(dim - 1));
    Rational s_pow = 1;  // (-s)^{2n-1-i}, filled from i = 2n-1 downward
    for (unsigned i = dim - 1; i + 1 > 0; --i) {
        f[i] = Rational(binomial_exact(dim - 1, i)) * s_pow * inv_fact;
        s_pow *= -s;
        if (i == 0) break;
    }
    TPolynomial fund(std::move(f));
    if (n % 2 == 1) fund *= Rational(-1);
    return p + fund;
}

TPolynomial GreenKernel::integral_over_s() const {
    const unsigned dim = 2 * n;
    // Polynomial part: integral of s^m over [-1,1] is 0 (m odd) or 2/(m+1).
    std::vector<Rational> c(dim + 1, Rational(0));
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned m = 0; m < dim; m += 2)
            c[i] += poly_coeffs[i][m] * Rational(2, long(m) + 1);
    // Fundamental part: integral over s in [-1, t] of (t-s)^{2n-1}/(2n-1)!
    // equals (t+1)^{2n}/(2n)!.
    const Rational inv_fact(Integer(1), factorial_exact(dim));
    for (unsigned i = 0; i <= dim; ++i) {
        Rational term = Rational(binomial_exact(dim, i)) * inv_fact;
        c[i] += (n % 2 == 0) ? term : -term;
    }
    return TPolynomial(std::move(c));
}

}  // namespace polyqei
