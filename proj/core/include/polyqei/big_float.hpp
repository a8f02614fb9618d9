#pragma once

#include "polyqei/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace polyqei {

// Arbitrary-precision float with runtime-selectable precision (MPFR backend,
// expression templates off so values behave like ordinary numerics). The
// spectral pipeline needs >= 128-bit significands: at n = 20 the kernel scale
// is ~2^{2n-1}/(2n-1)! ~ 1e-35 while the leading eigenvalue is ~1e-49, i.e.
// ~14 decimal digits cancel during the eigensolve.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned digits10_for_bits(unsigned bits) {
    // floor(bits * log10 2): decimal digits fully carried by the mantissa.
    return static_cast<unsigned>(bits * 0.30102999566398120);
}

// Sets the default working precision for BigFloat values constructed after the
// call. Conversion rounds decimal digits up so the mantissa holds at least
// `bits` bits.
inline void set_precision_bits(unsigned bits) {
    unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2;
    BigFloat::default_precision(digits);
}

// RAII precision scope for tests and nested computations.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits) : saved_digits_(BigFloat::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_digits_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_digits_;
};

// Scientific-notation rendering with a fixed digit count: the workhorse for
// deterministic (bit-identical per precision) machine-readable output.
inline std::string format_scientific(const BigFloat& v, unsigned sig_digits) {
    return v.str(static_cast<std::streamsize>(sig_digits), std::ios_base::scientific);
}

// Exact-rational to float conversion at the current working precision. The
// integer round-trips are exact; the one rounding happens in the division.
inline BigFloat to_bigfloat(const Rational& q) {
    return BigFloat(numerator(q).str()) / BigFloat(denominator(q).str());
}

}  // namespace polyqei
