#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace msym {

// 15-point Gauss-Legendre rule on [-1,1].
inline const double GAUSS15_X[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601700, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601700,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};

inline const double GAUSS15_W[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

template <typename F>
auto gauss15(F&& f, double a, double b) {
    double m = 0.5 * (a + b), h = 0.5 * (b - a);
    auto acc = f(m + h * GAUSS15_X[0]) * (h * GAUSS15_W[0]);
    for (int i = 1; i < 15; ++i) acc += f(m + h * GAUSS15_X[i]) * (h * GAUSS15_W[i]);
    return acc;
}

// Bisection-refined Gauss: accepts when the two halves reproduce the parent
// panel within tol. Suited to smooth integrands; kinked integrands should go
// through panel cuts instead.
template <typename F>
auto adaptive_gauss(F&& f, double a, double b, double tol, int depth = 0)
    -> decltype(f(a)) {
    auto whole = gauss15(f, a, b);
    double m = 0.5 * (a + b);
    auto left = gauss15(f, a, m);
    auto right = gauss15(f, m, b);
    if (depth > 48 || std::abs(left + right - whole) < tol) return left + right;
    return adaptive_gauss(f, a, m, 0.5 * tol, depth + 1) +
           adaptive_gauss(f, m, b, 0.5 * tol, depth + 1);
}

// One Gauss-15 panel between each pair of consecutive cut points.
template <typename F>
auto panel_integrate(F&& f, const std::vector<double>& cuts) -> decltype(f(cuts[0])) {
    decltype(f(cuts[0])) acc{};
    for (size_t i = 0; i + 1 < cuts.size(); ++i) acc += gauss15(f, cuts[i], cuts[i + 1]);
    return acc;
}

// Farey fractions of order Q in [lo, hi], ascending, via the Stern-Brocot
// next-term recurrence.
inline std::vector<double> farey_points(int Q, double lo = 0.0, double hi = 1.0) {
    std::vector<double> pts;
    if (lo <= 0.0) pts.push_back(0.0);
    long a = 0, b = 1, c = 1, d = Q;
    while (c <= Q) {
        long k = (Q + b) / d;
        long a2 = c, b2 = d;
        c = k * c - a;
        d = k * d - b;
        a = a2;
        b = b2;
        double x = double(a) / double(b);
        if (x > lo && x < hi) pts.push_back(x);
    }
    if (hi >= 1.0) pts.push_back(1.0);
    return pts;
}

}  // namespace msym
