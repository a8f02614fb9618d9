#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace polyqei {

// Exact arithmetic backbone. GMP keeps rationals in lowest terms with a
// positive denominator after every operation, which is exactly the invariant
// the exact-bound computations rely on: equality of two derivations is a hard
// == test, never a tolerance.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer factorial_exact(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: r is always an integer binomial prefix
    }
    return r;
}

// Pochhammer product of half-integers: (a2/2)(a2/2 + 1)...(a2/2 + k-1) where
// a2 is twice the (half-integer) start. Returns the exact rational
// prod_{i=0}^{k-1} (a2 + 2i) / 2^k. Keeps gamma ratios of half-integer
// arguments exact; no floating-point gamma is ever involved.
inline Rational pochhammer_half(long a2, unsigned k) {
    Integer num = 1;
    for (unsigned i = 0; i < k; ++i) num *= Integer(a2 + 2 * long(i));
    Integer den = Integer(1) << k;
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    return r.str();  // canonical "p/q", or "p" when the denominator is 1
}

}  // namespace polyqei
