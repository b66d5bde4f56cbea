#pragma once

#include <string>
#include <vector>

#include "msym/analytic.hpp"
#include "msym/cpow.hpp"

namespace msym {

// A function paired with its spectral parameter and expected to satisfy
// psi(z) = psi(z+1) + (z+1)^{-2s} psi(z/(z+1)) on C cut along (-inf, 0].
struct PeriodLikeFunction {
    AnalyticFunction psi;
    cplx s;
    std::string provenance;  // eisenstein-family | polynomial-weight | spectral
};

// psi_s(z) = 1 - z^{-2s}.
inline PeriodLikeFunction eisenstein_family(cplx s) {
    PeriodLikeFunction f;
    f.s = s;
    f.provenance = "eisenstein-family";
    f.psi.branch_point = 0.0;
    f.psi.descriptor = "eis";
    f.psi.evaluate = [s](cplx z) { return cplx(1.0, 0.0) - cpow(z, -2.0 * s); };
    return f;
}

// psi(z) = z^{2k-2} - 1 at s = 1 - k, an exact polynomial solution.
inline PeriodLikeFunction polynomial_period(int k) {
    PeriodLikeFunction f;
    f.s = cplx(1.0 - k, 0.0);
    f.provenance = "polynomial-weight";
    f.psi.branch_point = 0.0;
    f.psi.descriptor = "poly" + std::to_string(k);
    int deg = 2 * k - 2;
    f.psi.evaluate = [deg](cplx z) {
        cplx p(1.0, 0.0);
        for (int i = 0; i < deg; ++i) p *= z;
        return p - 1.0;
    };
    return f;
}

// Largest relative defect of the three-term equation over the samples.
template <typename Psi>
inline double three_term_residual(const Psi& psi, cplx s, const std::vector<cplx>& zs) {
    double worst = 0.0;
    for (cplx z : zs) {
        cplx a = psi(z);
        cplx b = psi(z + 1.0);
        cplx c = cpow(z + 1.0, -2.0 * s) * psi(z / (z + 1.0));
        double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
        worst = std::max(worst, std::abs(a - b - c) / scale);
    }
    return worst;
}

inline double three_term_residual(const PeriodLikeFunction& f, const std::vector<cplx>& zs) {
    return three_term_residual(f.psi, f.s, zs);
}

inline std::vector<cplx> standard_sample_grid() {
    return {cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.0, 0.0),
            cplx(1.5, 0.0), cplx(2.0, 1.0), cplx(3.0, -0.5)};
}

}  // namespace msym
