#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "msym/period_like.hpp"
#include "msym/quadrature.hpp"
#include "msym/rational.hpp"

namespace msym {

// ---------------------------------------------------------------------------
// Fourier coefficients of the weight-12 discriminant form
// ---------------------------------------------------------------------------

struct FourierCuspForm {
    int weight = 12;                   // 2k
    std::vector<long long> coeffs;     // a_1..a_N at indices 1..N
    long N() const { return long(coeffs.size()) - 1; }
};

namespace detail {
inline std::vector<long long> convolve_trunc(const std::vector<long long>& a,
                                             const std::vector<long long>& b, long N) {
    std::vector<long long> c(size_t(N) + 1, 0);
    for (long i = 0; i <= N && i < long(a.size()); ++i) {
        if (!a[i]) continue;
        long jmax = std::min<long>(N - i, long(b.size()) - 1);
        for (long j = 0; j <= jmax; ++j)
            if (b[j]) c[i + j] += a[i] * b[j];
    }
    return c;
}
}  // namespace detail

// tau(1..N) through eta^24: pentagonal-number series for eta, then
// convolution powers.  Coefficient growth keeps every intermediate product
// well inside 64 bits for N of a few hundred; the exact-arithmetic
// cross-check below guards the claim.
inline std::vector<long long> tau_pentagonal(long N) {
    std::vector<long long> P(size_t(N) + 1, 0);
    P[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > N && g2 > N) break;
        long long sgn = (k % 2) ? -1 : 1;
        if (g1 <= N) P[size_t(g1)] += sgn;
        if (g2 <= N) P[size_t(g2)] += sgn;
    }
    auto P2 = detail::convolve_trunc(P, P, N);
    auto P4 = detail::convolve_trunc(P2, P2, N);
    auto P8 = detail::convolve_trunc(P4, P4, N);
    auto P16 = detail::convolve_trunc(P8, P8, N);
    auto P24 = detail::convolve_trunc(P16, P8, N);
    std::vector<long long> tau(size_t(N) + 1, 0);
    for (long n = 1; n <= N; ++n) tau[size_t(n)] = P24[size_t(n - 1)];  // q * eta(q)^24
    return tau;
}

// Independent route: multiply the factors (1 - q^n)^24 one by one in exact
// integer arithmetic.
inline std::vector<Int> tau_product_exact(long N) {
    std::vector<Int> poly(size_t(N) + 1, Int(0));
    poly[0] = 1;
    for (long n = 1; n <= N; ++n) {
        std::vector<Int> fac(size_t(N) + 1, Int(0));
        Int binom = 1;
        for (long k = 0; k <= 24 && n * k <= N; ++k) {
            fac[size_t(n * k)] = (k % 2) ? -binom : binom;
            binom = binom * (24 - k) / (k + 1);
        }
        std::vector<Int> next(size_t(N) + 1, Int(0));
        for (long i = 0; i <= N; ++i) {
            if (poly[size_t(i)] == 0) continue;
            for (long j = 0; i + n * j <= N && j <= 24; ++j)
                if (fac[size_t(n * j)] != 0)
                    next[size_t(i + n * j)] += poly[size_t(i)] * fac[size_t(n * j)];
        }
        poly.swap(next);
    }
    std::vector<Int> tau(size_t(N) + 1, Int(0));
    for (long n = 1; n <= N; ++n) tau[size_t(n)] = poly[size_t(n - 1)];
    return tau;
}

inline FourierCuspForm delta_coefficients(long N) {
    if (N < 1) throw std::domain_error("delta_coefficients: N >= 1");
    FourierCuspForm f;
    f.weight = 12;
    f.coeffs.assign(size_t(N) + 1, 0);
    auto tau = tau_pentagonal(N);
    for (long n = 1; n <= N; ++n) f.coeffs[size_t(n)] = tau[size_t(n)];
    return f;
}

// Deligne bound |tau(n)| <= d(n) n^{11/2}, used as a sanity check only.
inline bool deligne_bound_ok(const FourierCuspForm& f) {
    for (long n = 1; n <= f.N(); ++n) {
        long dn = 0;
        for (long d = 1; d * d <= n; ++d)
            if (n % d == 0) dn += (d * d == n) ? 1 : 2;
        if (std::abs(double(f.coeffs[size_t(n)])) >
            double(dn) * std::pow(double(n), 5.5) * (1.0 + 1e-9))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// u(iy) and its Mellin transform
// ---------------------------------------------------------------------------

// Plain Fourier sum, reflection never applied. Accurate wherever the stored
// coefficients resolve the e^{-2 pi n y} tail; with 200 coefficients that is
// y down to ~0.09, where u itself is already ~1e-41.
inline double evaluate_u_direct(const FourierCuspForm& f, double y) {
    if (!(y > 0.0)) throw std::domain_error("evaluate_u_direct: y must be positive");
    double acc = 0.0;
    for (long n = 1; n <= f.N(); ++n) {
        double t = 2.0 * M_PI * double(n) * y;
        if (t > 700.0) break;
        acc += double(f.coeffs[size_t(n)]) * std::exp(-t);
    }
    return acc;
}

// u(iy) = sum a_n e^{-2 pi n y}; below y = 0.9 the weight-2k reflection
// u(iy) = (-1)^k y^{-2k} u(i/y) keeps the Fourier tail under control.
inline double evaluate_u(const FourierCuspForm& f, double y) {
    if (!(y > 0.0)) throw std::domain_error("evaluate_u: y must be positive");
    if (y < 0.9) {
        double refl = (f.weight / 2 % 2) ? -1.0 : 1.0;  // (-1)^k
        return refl * std::pow(y, -double(f.weight)) * evaluate_u(f, 1.0 / y);
    }
    return evaluate_u_direct(f, y);
}

// Lambda(rho) = int_0^inf u(iy) y^{rho-1} dy, truncated to [0.05, 14]
// (the tails are below 1e-30 for the discriminant form).
inline double Lambda_rho(const FourierCuspForm& f, double rho, double tol = 1e-12) {
    auto g = [&](double y) { return evaluate_u(f, y) * std::pow(y, rho - 1.0); };
    return adaptive_gauss(g, 0.05, 1.0, tol) + adaptive_gauss(g, 1.0, 14.0, tol);
}

// Mellin moments M_j = Lambda(j+1), j = 0..2k-2.
inline std::vector<double> mellin_moments(const FourierCuspForm& f) {
    std::vector<double> M;
    for (int j = 0; j <= f.weight - 2; ++j) M.push_back(Lambda_rho(f, double(j) + 1.0));
    return M;
}

// ---------------------------------------------------------------------------
// Period polynomial
// ---------------------------------------------------------------------------

// Coefficient of z^{w-j} is i * C(w, j) * (-i)^j * M_j, w = 2k - 2.
inline std::vector<cplx> period_polynomial(const FourierCuspForm& f,
                                           const std::vector<double>* moments = nullptr) {
    int w = f.weight - 2;
    std::vector<double> M = moments ? *moments : mellin_moments(f);
    if (long(M.size()) != w + 1)
        throw std::domain_error("period_polynomial: need w + 1 moments");
    std::vector<cplx> co(size_t(w) + 1);
    double binom = 1.0;
    cplx mi(0.0, -1.0);
    cplx pw = 1.0;  // (-i)^j
    for (int j = 0; j <= w; ++j) {
        co[size_t(j)] = cplx(0.0, 1.0) * binom * pw * M[size_t(j)];
        binom = binom * double(w - j) / double(j + 1);
        pw *= mi;
    }
    return co;
}

// Horner evaluation; coeffs[j] multiplies z^{deg - j}.
inline cplx polyval(const std::vector<cplx>& co, cplx z) {
    cplx acc = 0.0;
    for (const cplx& c : co) acc = acc * z + c;
    return acc;
}

// The polynomial as a period-like function at s = 1 - k, ready for the
// pseudo-measure machinery.
inline PeriodLikeFunction classical_period_function(const FourierCuspForm& f) {
    auto co = period_polynomial(f);
    PeriodLikeFunction plf;
    plf.s = cplx(1.0 - double(f.weight) / 2.0, 0.0);
    plf.provenance = "classical weight-" + std::to_string(f.weight);
    plf.psi.branch_point = 0.0;
    plf.psi.descriptor = "period-poly-w" + std::to_string(f.weight);
    plf.psi.evaluate = [co](cplx z) { return polyval(co, z); };
    return plf;
}

}  // namespace msym
