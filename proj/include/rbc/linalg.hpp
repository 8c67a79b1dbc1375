#pragma once

// Small dense linear algebra on std::vector<double>. Dimensions here are
// tiny (N <= 8 for geometry, a few hundred for the classifier layers), so
// plain loops are plenty.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rbc/rng.hpp"

namespace rbc {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major list of rows

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) {
    const double n = norm(a);
    if (n < 1e-300) throw std::invalid_argument("cannot normalize zero vector");
    return (1.0 / n) * a;
}

inline bool all_finite(const Vec& a) {
    for (double c : a)
        if (!std::isfinite(c)) return false;
    return true;
}

// Solve A x = b for square A by Gaussian elimination with partial pivoting.
// Returns false if A is singular to within `tol` on the pivots.
inline bool solve_linear(Mat a, Vec b, Vec& x, double tol = 1e-12) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < tol) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri][c] * x[c];
        x[ri] = s / a[ri][ri];
    }
    return true;
}

// Orthonormal basis of the hyperplane orthogonal to unit vector `n`
// (N-1 vectors), built by Gram-Schmidt against the coordinate axes.
inline Mat hyperplane_basis(const Vec& n) {
    const std::size_t dim = n.size();
    Mat basis;
    basis.reserve(dim - 1);
    for (std::size_t axis = 0; axis < dim && basis.size() < dim - 1; ++axis) {
        Vec v(dim, 0.0);
        v[axis] = 1.0;
        Vec w = v - dot(v, n) * n;
        for (const Vec& u : basis) w = w - dot(w, u) * u;
        const double len = norm(w);
        if (len > 1e-8) basis.push_back((1.0 / len) * w);
    }
    if (basis.size() != dim - 1) throw std::runtime_error("hyperplane basis construction failed");
    return basis;
}

// Haar-random rotation matrix in SO(N): QR of a Gaussian matrix with the
// sign convention fixed, determinant corrected to +1.
inline Mat random_rotation(int dim, std::uint64_t seed) {
    RngEngine rng(seed);
    const std::size_t n = static_cast<std::size_t>(dim);
    Mat q;
    q.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n);
        for (auto& c : v) c = gaussian(rng);
        for (const Vec& u : q) v = v - dot(v, u) * u;
        double len = norm(v);
        while (len < 1e-8) {  // degenerate draw, retry this row
            for (auto& c : v) c = gaussian(rng);
            for (const Vec& u : q) v = v - dot(v, u) * u;
            len = norm(v);
        }
        q.push_back((1.0 / len) * v);
    }
    // det sign fix: flip the last row if needed (compute via expansion on
    // small n using the linear solver's pivoting is overkill; use the
    // recursive definition through Gaussian elimination).
    Mat a = q;
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    if (det < 0.0)
        for (auto& c : q[n - 1]) c = -c;
    return q;
}

inline Vec apply(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

}  // namespace rbc
