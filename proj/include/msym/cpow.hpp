#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace msym {

using cplx = std::complex<double>;

// Principal-branch power t^s with Arg t in (-pi, pi]. The boundary case
// (negative real t) takes Arg = +pi regardless of the sign of a zero
// imaginary part.
inline cplx cpow(cplx t, cplx s) {
    if (t.real() == 0.0 && t.imag() == 0.0)
        throw std::domain_error("cpow: zero base");
    double arg;
    if (t.imag() == 0.0 && t.real() < 0.0)
        arg = M_PI;
    else
        arg = std::atan2(t.imag(), t.real());
    double lg = 0.5 * std::log(t.real() * t.real() + t.imag() * t.imag());
    cplx w = s * cplx(lg, arg);
    return std::exp(w);
}

inline cplx cpow(double t, cplx s) { return cpow(cplx(t, 0.0), s); }

}  // namespace msym
