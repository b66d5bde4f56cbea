#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "msym/analytic.hpp"
#include "msym/cpow.hpp"
#include "msym/hurwitz.hpp"
#include "msym/period_like.hpp"
#include "msym/transfer.hpp"

namespace msym {

struct NormalizationDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluator for h(w) = sum_k c_k T_k(2w-1), psi(z) = h(z-1). Inside the
// Bernstein ellipse of the coefficients' convergence the sum is evaluated by
// Clenshaw recurrence; outside, the eigen equation
//   parity * h(w) = sum_{n>=1} (w+n)^{-2s} h(1/(w+n))
// unfolds the request into trusted evaluations plus a zeta-represented tail,
// so arguments with arbitrarily large |Re w| stay O(1) in cost.
class PeriodEvaluator {
  public:
    static constexpr double RHO_TRUST = 1.9;
    static constexpr double TRUNC_TOL = 3e-13;
    static constexpr int DERIV_ORDER = 14;

    PeriodEvaluator(std::vector<cplx> coeffs, cplx s_, int parity_)
        : full_(std::move(coeffs)), s(s_), parity(parity_) {
        double mx = 0.0;
        for (auto& ck : full_) mx = std::max(mx, std::abs(ck));
        size_t k = full_.size();
        auto noisy = [&](size_t kk) {
            double m = 0.0;
            for (size_t j = kk - 3; j < kk; ++j) m = std::max(m, std::abs(full_[j]));
            return m < TRUNC_TOL * mx;
        };
        while (k > 8 && noisy(k)) --k;
        c_.assign(full_.begin(), full_.begin() + k);
        rebuild_derivs();
    }

    cplx clenshaw(cplx t) const {
        cplx b1 = 0.0, b2 = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            cplx b0 = 2.0 * t * b1 - b2 + *it;
            b2 = b1;
            b1 = b0;
        }
        return b1 - t * b2;
    }

    static double ellipse_rho(cplx t) {
        cplx r = t + std::sqrt(t * t - cplx(1.0, 0.0));
        double rho = std::abs(r);
        return rho < 1.0 ? 1.0 / rho : rho;
    }

    cplx h(cplx w, int depth = 0) const {
        if (w.imag() == 0.0 && w.real() <= -1.0)
            throw EvaluationOutsideDomain("PeriodEvaluator: argument on the cut");
        cplx t = 2.0 * w - 1.0;
        if (ellipse_rho(t) <= RHO_TRUST) return clenshaw(t);
        if (depth > 8) throw std::runtime_error("PeriodEvaluator: unfold depth exceeded");
        int n1 = (int)std::max(10.0, std::ceil(8.0 + std::max(0.0, -w.real())));
        cplx acc = 0.0;
        for (int n = 1; n <= n1; ++n) {
            cplx wn = w + double(n);
            acc += cpow(wn, -2.0 * s) * h(1.0 / wn, depth + 1);
        }
        for (int j = 0; j < (int)derivs.size(); ++j)
            acc += derivs[j] * hurwitz_zeta(2.0 * s + double(j), w + double(n1 + 1));
        return double(parity) * acc;
    }

    cplx psi(cplx z) const { return h(z - 1.0); }

    void rescale(cplx divisor) {
        for (auto& v : c_) v /= divisor;
        for (auto& v : full_) v /= divisor;
        for (auto& v : derivs) v /= divisor;
    }

    const std::vector<cplx>& coeffs() const { return c_; }
    const std::vector<cplx>& full_coeffs() const { return full_; }

    // derivs[j] = h^{(j)}(0) / j!
    std::vector<cplx> derivs;
    cplx s;
    int parity;

  private:
    void rebuild_derivs() {
        derivs.assign(DERIV_ORDER, cplx(0.0));
        double fact = 1.0, pw2 = 1.0;
        for (int j = 0; j < DERIV_ORDER; ++j) {
            if (j > 0) {
                fact *= j;
                pw2 *= 2.0;
            }
            cplx acc = 0.0;
            for (size_t k = 0; k < c_.size(); ++k) {
                // T_k^{(j)}(-1) = (-1)^{k+j} prod_{i<j} (k^2-i^2)/(2i+1)
                double val = 1.0;
                for (int i = 0; i < j; ++i)
                    val *= (double(k) * double(k) - double(i) * double(i)) / (2.0 * i + 1.0);
                double sgn = ((k + j) % 2 == 0) ? 1.0 : -1.0;
                acc += c_[k] * (sgn * val);
            }
            derivs[j] = pw2 * acc / fact;
        }
    }

    std::vector<cplx> full_;
    std::vector<cplx> c_;
};

// Reconstructed period function attached to an eigen hit. Normalized so that
// psi(1) = 1 when that value is usable; both low eigenfunctions have a zero
// at z = 1 (the odd one structurally, the even one empirically, with
// psi(1) = 2 psi(2) to high accuracy), so when |psi(1)| falls below 1e-6 of
// the sup over h's base interval the normalization falls back to fixing the
// sup point at 1. `normalization` records which mode applied; strict callers
// get the degenerate-normalization error instead of the fallback.
struct SpectralPeriodFunction {
    std::shared_ptr<PeriodEvaluator> ev;
    double R = 0.0;
    int parity = 0;
    double residual = 0.0;
    std::string normalization;

    PeriodLikeFunction plf() const {
        auto e = ev;
        PeriodLikeFunction f;
        f.s = e->s;
        f.provenance = "spectral";
        f.psi.branch_point = 0.0;
        f.psi.descriptor = "spectral-period";
        f.psi.evaluate = [e](cplx z) { return e->psi(z); };
        return f;
    }
};

inline SpectralPeriodFunction spectral_period_function(const EigenDatum& datum,
                                                       bool strict = false) {
    if (datum.residual > 1e-5)
        throw std::domain_error("spectral_period_function: eigen residual above 1e-5");
    auto ev = std::make_shared<PeriodEvaluator>(datum.coeffs, cplx(0.5, datum.R), datum.parity);
    cplx psi1 = ev->h(0.0);
    double sup = 0.0;
    cplx at_sup = 0.0;
    for (int j = 0; j <= 64; ++j) {
        cplx v = ev->h(cplx(j / 64.0, 0.0));
        if (std::abs(v) > sup) {
            sup = std::abs(v);
            at_sup = v;
        }
    }
    SpectralPeriodFunction out;
    if (std::abs(psi1) > 1e-6 * sup) {
        ev->rescale(psi1);
        out.normalization = "value-at-one";
    } else if (strict) {
        throw NormalizationDegenerate("spectral_period_function: |psi(1)| below 1e-6 of sup");
    } else {
        ev->rescale(at_sup);
        out.normalization = "sup";
    }
    out.ev = ev;
    out.R = datum.R;
    out.parity = datum.parity;
    out.residual = datum.residual;
    return out;
}

// Max deviation of psi|_s(0,1;1,0) from parity * psi over the samples.
inline double parity_residual(const PeriodEvaluator& ev, const std::vector<cplx>& zs) {
    double worst = 0.0;
    for (cplx z : zs) {
        cplx lhs = cpow(z, -2.0 * ev.s) * ev.psi(1.0 / z);
        cplx rhs = double(ev.parity) * ev.psi(z);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return worst;
}

}  // namespace msym
