#pragma once

#include "polyqei/rational.hpp"

#include <vector>

namespace polyqei {

// Dense polynomial in the monomial basis of t, exact rational coefficients.
// coeffs[i] multiplies t^i; trailing zeros are trimmed so degree() is honest.
struct TPolynomial {
    std::vector<Rational> coeffs;

    TPolynomial() = default;
    explicit TPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Rational evaluate(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    TPolynomial& operator+=(const TPolynomial& o) {
        if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        trim();
        return *this;
    }
    TPolynomial& operator-=(const TPolynomial& o) {
        if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        trim();
        return *this;
    }
    TPolynomial& operator*=(const Rational& c) {
        for (auto& a : coeffs) a *= c;
        trim();
        return *this;
    }

    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator*(TPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.coeffs == b.coeffs; }
};

// Polynomial in z = 1 - t^2; coeffs[k] multiplies z^k. Houses P(z) = sum alpha_k z^k.
struct ZPolynomial {
    std::vector<Rational> coeffs;

    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Rational evaluate(const Rational& z) const {
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
};

// Exact k-fold product of a polynomial with (1 - t^2)^k handled via repeated
// convolution with the degree-2 factor; cheap at the degrees in play (<= 4n).
inline TPolynomial multiply_by_one_minus_t2(const TPolynomial& p, unsigned power) {
    TPolynomial r = p;
    for (unsigned rep = 0; rep < power; ++rep) {
        std::vector<Rational> c(r.coeffs.size() + 2, Rational(0));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            c[i] += r.coeffs[i];
            c[i + 2] -= r.coeffs[i];
        }
        r = TPolynomial(std::move(c));
    }
    return r;
}

// sum_k p.coeffs[k] * (1 - t^2)^{offset + k}, exactly, in the t-monomial basis.
inline TPolynomial expand_z_to_t(const ZPolynomial& p, unsigned offset) {
    TPolynomial result;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        TPolynomial unit(std::vector<Rational>{p.coeffs[k]});
        result += multiply_by_one_minus_t2(unit, offset + static_cast<unsigned>(k));
    }
    return result;
}

// Exact order-fold derivative; degree drops by `order` (or hits the zero polynomial).
inline TPolynomial differentiate(const TPolynomial& p, unsigned order = 1) {
    TPolynomial r = p;
    for (unsigned rep = 0; rep < order; ++rep) {
        if (r.coeffs.size() <= 1) return TPolynomial{};
        std::vector<Rational> c(r.coeffs.size() - 1);
        for (std::size_t i = 1; i < r.coeffs.size(); ++i) c[i - 1] = r.coeffs[i] * Rational(long(i));
        r = TPolynomial(std::move(c));
    }
    return r;
}

}  // namespace polyqei
