#include "polyqei/exact_bounds.hpp"

#include "polyqei/linear_solve.hpp"

#include <cmath>
#include <stdexcept>

namespace polyqei {

AlphaSolution alpha_via_linear_system(unsigned n) {
    if (n < 1) throw std::invalid_argument("alpha_via_linear_system: n must be >= 1");
    const std::size_t m = n + 1;

    // M = A B with A = diag((-1)^j [2(n+j)]!/(2j)!) and B_{jk} = C(n+k, n+j).
    // B vanishes for j > k, so M is upper triangular with nonzero diagonal:
    // the system is always nonsingular.
    RationalMatrix M(m, RationalVector(m, Rational(0)));
    RationalVector beta(m);
    for (unsigned j = 0; j <= n; ++j) {
        Rational a = Rational(factorial_exact(2 * (n + j)), factorial_exact(2 * j));
        if (j % 2) a = -a;
        beta[j] = Rational(binomial_exact(n, j));
        if (j % 2) beta[j] = -beta[j];
        for (unsigned k = 0; k <= n; ++k)
            M[j][k] = a * Rational(binomial_exact(n + k, n + j));
    }

    AlphaSolution sol;
    sol.n = n;
    sol.alphas = solve_linear_exact(M, beta);
    sol.P = ZPolynomial(sol.alphas);
    return sol;
}

Rational alpha_closed_form(unsigned n, unsigned j) {
    if (n < 1) throw std::invalid_argument("alpha_closed_form: n must be >= 1");
    if (j > n) throw std::invalid_argument("alpha_closed_form: j out of range 0..n");

    // G(1/2+2n) / G(1/2+n+j) = pochhammer(1/2+n+j, n-j): a half-integer product,
    // so the sqrt(pi) factors cancel and the whole expression is rational.
    Rational half_ratio = pochhammer_half(2 * long(n + j) + 1, n - j);
    Rational num = Rational(long(n)) * Rational(factorial_exact(2 * n - j - 1)) *
                   Rational(factorial_exact(2 * j));
    Rational den = half_ratio * Rational(factorial_exact(2 * (n + j))) *
                   Rational(factorial_exact(j)) * Rational(factorial_exact(n - j));
    return num / den;
}

TPolynomial residual_check(const AlphaSolution& sol) {
    TPolynomial combo = expand_z_to_t(sol.P, sol.n);
    TPolynomial deriv = differentiate(combo, 2 * sol.n);
    if (sol.n % 2) deriv *= Rational(-1);
    TPolynomial target = expand_z_to_t(ZPolynomial({Rational(1)}), sol.n);
    return deriv - target;
}

SpectralRadiusBounds spectral_bounds(unsigned n) {
    AlphaSolution sol = alpha_via_linear_system(n);
    SpectralRadiusBounds b;
    b.n = n;
    b.lower = sol.alphas[0];
    b.upper = 0;
    for (const auto& a : sol.alphas) b.upper += a;
    b.ratio_Rn = b.upper / b.lower;
    b.lambda_lower = Rational(1) / b.upper;
    b.lambda_upper = Rational(1) / b.lower;
    return b;
}

RnSeries ratio_Rn_series(unsigned n) {
    if (n < 1) throw std::invalid_argument("ratio_Rn_series: n must be >= 1");
    RnSeries s;
    s.terms.reserve(n + 1);
    s.terms.emplace_back(1);
    for (unsigned k = 0; k < n; ++k) {
        // (k+1/2)(k-n) / [(k+1-2n)(n+k+1)]; both differences are negative for
        // k < n, so every term stays positive.
        Rational num = Rational(2 * long(k) + 1, 2) * Rational(long(k) - long(n));
        Rational den = Rational(long(k) + 1 - 2 * long(n)) * Rational(long(n + k) + 1);
        s.terms.push_back(s.terms.back() * num / den);
    }
    s.value = 0;
    for (const auto& t : s.terms) s.value += t;
    return s;
}

double stirling_asymptote(unsigned n) {
    if (n < 1) throw std::invalid_argument("stirling_asymptote: n must be >= 1");
    // 1/(sqrt(2)(2n)!) via log-gamma so large n cannot overflow.
    return std::exp(-0.5 * std::log(2.0) - std::lgamma(2.0 * n + 1.0));
}

}  // namespace polyqei
