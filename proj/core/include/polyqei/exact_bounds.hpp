#pragma once

#include "polyqei/polynomial.hpp"
#include "polyqei/rational.hpp"

#include <utility>
#include <vector>

namespace polyqei {

// Solution of the clamped polyharmonic identity
//   (-1)^n d^{2n}/dt^{2n} [ sum_k alpha_k (1-t^2)^{n+k} ] = (1-t^2)^n
// on (-1,1): the alpha_j are the coefficients of P in (T f)(t) = (1-t^2)^n P(1-t^2)
// for f = (1-t^2)^n, where T is the solution operator of the eigenvalue problem.
struct AlphaSolution {
    unsigned n = 0;
    std::vector<Rational> alphas;  // alpha_0 .. alpha_n, all positive
    ZPolynomial P;                 // P(z) = sum alpha_k z^k
};

// Rigorous two-sided enclosure of the spectral radius r(T_n) and, reciprocally,
// of the minimal eigenvalue lambda_n:
//   alpha_0 = P(0) <= r(T_n) <= P(1) = sum_j alpha_j,
//   lambda_n in [1/sum alpha_j, 1/alpha_0].
struct SpectralRadiusBounds {
    unsigned n = 0;
    Rational lower;         // alpha_0
    Rational upper;         // sum alpha_j
    Rational ratio_Rn;      // upper / lower
    Rational lambda_lower;  // 1 / upper
    Rational lambda_upper;  // 1 / lower
};

// alpha via the linear system A B alpha = beta with
//   A = diag( (-1)^j [2(n+j)]! / (2j)! ),  B_{jk} = C(n+k, n+j),  beta_j = (-1)^j C(n,j).
AlphaSolution alpha_via_linear_system(unsigned n);

// alpha_j = n G(1/2+n+j) G(2n-j) G(1+2j) / [ G(1/2+2n) G(2n+1+2j) G(1+j) G(n+1-j) ],
// evaluated exactly: the half-integer gamma ratio reduces to a Pochhammer
// product of half-integers, everything else is factorials.
Rational alpha_closed_form(unsigned n, unsigned j);

// (-1)^n D^{2n}[ sum alpha_k (1-t^2)^{n+k} ] - (1-t^2)^n; the zero polynomial
// exactly when `sol` solves the defining identity.
TPolynomial residual_check(const AlphaSolution& sol);

SpectralRadiusBounds spectral_bounds(unsigned n);

// R_n = sum_{k=0}^{n} c_{n,k} with c_{n,0} = 1 and the exact term ratio
//   c_{k+1}/c_k = (k+1/2)(k-n) / [ (k+1-2n)(n+k+1) ];
// every term satisfies 0 <= c_{n,k} <= 2^{-k}, which is what drives R_n -> 1.
struct RnSeries {
    Rational value;               // R_n = sum of terms = (sum alpha_j)/alpha_0
    std::vector<Rational> terms;  // c_{n,0} .. c_{n,n}
};
RnSeries ratio_Rn_series(unsigned n);

// 1/(sqrt(2) (2n)!) -- the large-n asymptote of r(T_n). An asymptote only:
// it exceeds alpha_0 for large n, so it is never reported as a bound.
double stirling_asymptote(unsigned n);

}  // namespace polyqei
