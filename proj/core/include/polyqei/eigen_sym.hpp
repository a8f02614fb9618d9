#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polyqei {

// Symmetric dense eigensolvers, templated over the scalar so the same code
// runs in double (tests, benchmarks) and in BigFloat (production spectral
// pipeline). Only eigenvalues are produced; the one eigenvector diagnostic the
// pipeline needs (Perron positivity) comes from power iteration instead.

namespace detail {
template <typename Real>
Real hypot2(const Real& a, const Real& b) {
    using std::abs;
    using std::sqrt;
    Real aa = abs(a), ab = abs(b);
    if (aa > ab) {
        Real r = ab / aa;
        return aa * sqrt(Real(1) + r * r);
    }
    if (ab == 0) return Real(0);
    Real r = aa / ab;
    return ab * sqrt(Real(1) + r * r);
}
}  // namespace detail

// Householder reduction of a dense symmetric matrix (row-major, size m*m) to
// tridiagonal form (d = diagonal, e = subdiagonal). The matrix is destroyed.
template <typename Real>
void householder_tridiagonalize(std::vector<Real>& a, std::size_t m, std::vector<Real>& d,
                                std::vector<Real>& e) {
    using std::abs;
    using std::sqrt;
    d.assign(m, Real(0));
    e.assign(m, Real(0));
    auto at = [&](std::size_t r, std::size_t c) -> Real& { return a[r * m + c]; };

    for (std::size_t i = m - 1; i > 0; --i) {
        std::size_t l = i - 1;
        Real h = 0, scale = 0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += abs(at(i, k));
            if (scale == 0) {
                e[i] = at(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                Real f = at(i, l);
                Real g = (f >= 0) ? -sqrt(h) : sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0;
                for (std::size_t j = 0; j <= l; ++j) {
                    g = 0;
                    for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                Real hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k)
                        at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    for (std::size_t i = 0; i < m; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal (d, e); returns eigenvalues in
// descending order. Classic EISPACK tql1 with the standard relative deflation
// test, working at whatever precision Real carries.
template <typename Real>
std::vector<Real> tridiagonal_eigenvalues(std::vector<Real> d, std::vector<Real> e) {
    using std::abs;
    const std::size_t m = d.size();
    if (m == 0) return {};
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (std::size_t i = 1; i < m; ++i) e[i - 1] = e[i];
    e[m - 1] = 0;

    for (std::size_t l = 0; l < m; ++l) {
        int iters = 0;
        std::size_t mdx;
        do {
            for (mdx = l; mdx + 1 < m; ++mdx) {
                Real dd = abs(d[mdx]) + abs(d[mdx + 1]);
                if (abs(e[mdx]) <= eps * dd) break;
            }
            if (mdx != l) {
                if (++iters == 50)
                    throw std::runtime_error("tridiagonal_eigenvalues: QL iteration stalled");
                Real g = (d[l + 1] - d[l]) / (2 * e[l]);
                Real r = detail::hypot2(g, Real(1));
                Real sign_r = (g >= 0) ? abs(r) : -abs(r);
                g = d[mdx] - d[l] + e[l] / (g + sign_r);
                Real s = 1, c = 1, p = 0;
                bool deflated_early = false;
                for (std::size_t i = mdx; i-- > l;) {
                    Real f = s * e[i];
                    Real b = c * e[i];
                    r = detail::hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0) {
                        d[i + 1] -= p;
                        e[mdx] = 0;
                        deflated_early = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (deflated_early) continue;
                d[l] -= p;
                e[l] = g;
                e[mdx] = 0;
            }
        } while (mdx != l);
    }
    std::sort(d.begin(), d.end(), [](const Real& x, const Real& y) { return x > y; });
    return d;
}

// Eigenvalues of a dense symmetric matrix, descending. Destroys the input.
template <typename Real>
std::vector<Real> symmetric_eigenvalues(std::vector<Real>& a, std::size_t m) {
    std::vector<Real> d, e;
    householder_tridiagonalize(a, m, d, e);
    return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

// Symmetric matrix in packed lower-triangle storage: entry (r,c) with r >= c
// lives at r(r+1)/2 + c. Halves the memory of the large power-iteration path.
template <typename Real>
struct PackedSymmetric {
    std::size_t m = 0;
    std::vector<Real> a;  // size m(m+1)/2

    void resize(std::size_t size) {
        m = size;
        a.assign(size * (size + 1) / 2, Real(0));
    }
    Real& at(std::size_t r, std::size_t c) { return a[r * (r + 1) / 2 + c]; }  // r >= c

    void multiply(const std::vector<Real>& x, std::vector<Real>& y) const {
        y.assign(m, Real(0));
        const Real* p = a.data();
        for (std::size_t r = 0; r < m; ++r) {
            Real acc = 0;
            const Real& xr = x[r];
            for (std::size_t c = 0; c < r; ++c, ++p) {
                acc += *p * x[c];
                y[c] += *p * xr;
            }
            acc += *p * xr;  // diagonal
            ++p;
            y[r] += acc;
        }
    }
};

// Top eigenvalue(s) of a packed symmetric positive matrix by deterministic
// power iteration / 2-dimensional subspace iteration (no randomness anywhere:
// the start vectors are fixed). Returns the dominant `want` (1 or 2)
// eigenvalues in descending order. Convergence is measured on the Rayleigh
// quotients of all wanted vectors. When out_vectors is supplied it receives
// the converged orthonormal block (dominant vector first).
template <typename Real>
std::vector<Real> packed_top_eigenvalues(const PackedSymmetric<Real>& mat,
                                         std::vector<std::vector<Real>> starts, std::size_t want,
                                         const Real& rel_tol, int max_iters = 400,
                                         std::vector<std::vector<Real>>* out_vectors = nullptr) {
    using std::abs;
    using std::sqrt;
    const std::size_t m = mat.m;
    std::vector<std::vector<Real>>& v = starts;
    if (v.empty() || v.size() < want)
        throw std::invalid_argument("packed_top_eigenvalues: need a start per wanted value");

    auto dot = [m](const std::vector<Real>& x, const std::vector<Real>& y) {
        Real s = 0;
        for (std::size_t i = 0; i < m; ++i) s += x[i] * y[i];
        return s;
    };
    auto normalize = [&](std::vector<Real>& x) {
        Real nrm = sqrt(dot(x, x));
        if (nrm == 0) throw std::runtime_error("packed_top_eigenvalues: start vector collapsed");
        for (auto& xi : x) xi /= nrm;
    };

    for (auto& s : v) normalize(s);
    std::vector<Real> ray(v.size(), Real(0)), prev(v.size(), Real(0)), w;
    for (int it = 0; it < max_iters; ++it) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            mat.multiply(v[j], w);
            ray[j] = dot(v[j], w);
            v[j].swap(w);
        }
        // Gram-Schmidt keeps the block linearly independent (deterministic).
        normalize(v[0]);
        for (std::size_t j = 1; j < v.size(); ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Real proj = dot(v[j], v[k]);
                for (std::size_t i = 0; i < m; ++i) v[j][i] -= proj * v[k][i];
            }
            normalize(v[j]);
        }
        if (it > 0) {
            bool all_stable = true;
            for (std::size_t j = 0; j < want; ++j)
                if (abs(ray[j] - prev[j]) > rel_tol * abs(ray[j])) all_stable = false;
            if (all_stable) {
                if (out_vectors) *out_vectors = v;
                std::vector<Real> out(ray.begin(), ray.begin() + static_cast<long>(want));
                std::sort(out.begin(), out.end(),
                          [](const Real& x, const Real& y) { return x > y; });
                return out;
            }
        }
        prev = ray;
    }
    throw std::runtime_error("packed_top_eigenvalues: power iteration did not converge");
}

}  // namespace polyqei
