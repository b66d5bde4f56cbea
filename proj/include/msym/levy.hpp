#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "msym/contfrac.hpp"
#include "msym/hurwitz.hpp"
#include "msym/pseudo_measure.hpp"
#include "msym/rational.hpp"

namespace msym {

// ---------------------------------------------------------------------------
// Lévy intervals
// ---------------------------------------------------------------------------

// The set {xi in (0, 1/2] : (q_i(xi), q_{i+1}(xi)) = (p, q) for some i} is a
// single cylinder: endpoints are the convergent p_n/q_n of the defining
// digit word and its mediant with the previous convergent.  Closure is at
// the convergent endpoint.
struct LevyInterval {
    long p = 0, q = 0;
    Rational conv;     // closed endpoint
    Rational mediant;  // open endpoint
    Rational lo() const { return conv < mediant ? conv : mediant; }
    Rational hi() const { return conv < mediant ? mediant : conv; }
    bool closed_lo() const { return conv < mediant; }
    bool closed_hi() const { return !(conv < mediant); }
    Rational length() const { return hi() - lo(); }
    bool contains(const Rational& x) const {
        if (x == conv) return true;
        if (x == mediant) return false;
        return lo() < x && x < hi();
    }
    OrientedSegment oriented() const {
        return {Cusp(conv.num, conv.den), Cusp(mediant.num, mediant.den)};
    }
};

// Digit word whose continuant pair is (p, q): the reverse of the canonical
// expansion of p/q.  Its first digit is >= 2, so the cylinder sits in
// (0, 1/2].
inline std::vector<long> levy_word(long p, long q) {
    if (!(0 < p && p < q) || std::gcd(p, q) != 1)
        throw std::domain_error("levy_word: need coprime 0 < p < q");
    std::vector<long> digits;
    long n = p, d = q;  // expand p/q
    while (n != 0) {
        digits.push_back(d / n);
        long r = d % n;
        d = n;
        n = r;
    }
    // canonical already (Euclid never emits a trailing 1 for p/q in lowest
    // terms except p/q = 1/1, excluded by p < q)
    std::reverse(digits.begin(), digits.end());
    return digits;
}

inline LevyInterval levy_interval(long p, long q) {
    auto word = levy_word(p, q);
    Int P1 = 0, P0 = 1, Q1 = 1, Q0 = 0;
    for (long a : word) {
        Int Pn = a * P1 + P0, Qn = a * Q1 + Q0;
        P0 = P1; P1 = Pn;
        Q0 = Q1; Q1 = Qn;
    }
    if (Q1 != q || Q0 != p)
        throw std::logic_error("levy_interval: continuant walk lost the pair");
    LevyInterval iv;
    iv.p = p;
    iv.q = q;
    iv.conv = Rational(P1, Q1);
    iv.mediant = Rational(P1 + P0, Q1 + Q0);
    return iv;
}

// Consecutive convergent-denominator pairs (q_i, q_{i+1}) of a rational
// argument, starting from (q_0, q_1) = (1, a_1).
inline std::vector<std::pair<long, long>> denominator_pairs(long u, long v,
                                                            long q_cap = -1) {
    if (u <= 0 || v <= 0 || u >= v) throw std::domain_error("denominator_pairs: need 0 < u < v");
    long g = std::gcd(u, v);
    u /= g;
    v /= g;
    std::vector<std::pair<long, long>> out;
    long qp = 0, qc = 1;
    long n = u, d = v;
    while (n != 0) {
        long a = d / n;
        long r = d % n;
        long qn = a * qc + qp;
        out.emplace_back(qc, qn);
        if (q_cap > 0 && qn > q_cap) break;
        qp = qc;
        qc = qn;
        d = n;
        n = r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lévy 1-forms
// ---------------------------------------------------------------------------

struct LevyWeight {
    // value on a consecutive-denominator pair; pairs outside the intended
    // support should return 0
    std::function<cplx(long p, long q)> r;
    // majorant |r(p, q)| <= decay_bound(q)
    std::function<double(long q)> decay_bound;
};

inline LevyWeight levy_weight_qpow(double expo) {
    LevyWeight w;
    w.r = [expo](long, long q) { return cplx(std::pow(double(q), expo), 0.0); };
    w.decay_bound = [expo](long q) { return std::pow(double(q), expo); };
    return w;
}

struct LevyForm {
    LevyWeight weight;
    int depth = 60;
};

// l_r(xi) = sum_i r(q_i, q_{i+1}); floating-point continued-fraction
// descent, terminating on the depth cap, denominator overflow, or a
// resolved rational tail.
inline cplx levy_form_eval(const LevyForm& form, double xi) {
    if (!(xi > 0.0 && xi < 1.0)) throw std::domain_error("levy_form_eval: xi outside (0,1)");
    cplx acc = 0.0;
    double x = xi;
    double qp = 0.0, qc = 1.0;
    for (int i = 0; i < form.depth; ++i) {
        if (x <= 1e-12) break;
        double a = std::floor(1.0 / x);
        double qn = a * qc + qp;
        if (qn >= 1e15) break;
        acc += form.weight.r(long(qc), long(std::min(qn, 9e14)));
        x = 1.0 / x - a;
        qp = qc;
        qc = qn;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The interval-sum identity
// ---------------------------------------------------------------------------

struct LevyIdentityReport {
    cplx integral{0.0, 0.0};    // int_0^{1/2} l_r
    cplx interval_sum{0.0, 0.0};  // sum_{q <= q_max} sum_p r(p,q) / ((p+q) q)
    double gap = 0.0;
    long q_max = 0;
    long quad_points = 0;
    bool converged = true;
};

// The integral side is a midpoint Riemann sum: l_r has a dense set of jump
// points (every interval endpoint), which starves interval-halving
// quadrature, while the midpoint sum converges at the 1e-8 level for
// q^-4-type weights well inside the 1e-6 target.
inline LevyIdentityReport levy_identity_check(const LevyWeight& weight, long q_max,
                                              double quad_tol,
                                              long quad_points = 2'000'000) {
    LevyForm form{weight, 60};
    cplx integral = 0.0;
    double h = 0.5 / double(quad_points);
    for (long k = 0; k < quad_points; ++k)
        integral += levy_form_eval(form, (double(k) + 0.5) * h);
    integral *= h;

    cplx series = 0.0;
    for (long q = 2; q <= q_max; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            cplx rv = weight.r(p, q);
            if (rv != cplx(0.0, 0.0)) series += rv / double((p + q) * q);
        }

    LevyIdentityReport rep;
    rep.integral = integral;
    rep.interval_sum = series;
    rep.gap = std::abs(integral - series);
    rep.q_max = q_max;
    rep.quad_points = quad_points;
    rep.converged = rep.gap <= quad_tol;
    return rep;
}

// ---------------------------------------------------------------------------
// The measure-weighted transform
// ---------------------------------------------------------------------------

struct LevyMellinResult {
    cplx value{0.0, 0.0};
    cplx eigen_route{0.0, 0.0};
    double agreement_gap = 0.0;  // relative gap between the two routes
    long q_max = 0;
};

// Interval-sum form: sum over coprime p < q <= q_max of
// q^-rho mu(-inf, -p/q)|_s (1, -p; 0, q) (z) / psi(z), which is
// r_u(p, q) / ((p+q) q) in the weight normalization used throughout.
inline cplx levy_mellin_interval_sum(const PeriodLikeFunction& plf, cplx rho, long q_max,
                                     cplx z) {
    cplx pz = plf.psi(z);
    if (std::abs(pz) < 1e-10)
        throw std::domain_error("levy_mellin: |psi(z)| below 1e-10");
    cplx acc = 0.0;
    // p runs to q: the (1,1) term is the q = 1 chain to -1, present in the
    // measure-side sum even though (1,1) never shows up as a denominator
    // pair for xi <= 1/2 (that discrepancy lives in the weight-side report).
    for (long q = 1; q <= q_max; ++q)
        for (long p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Mat2 g(1, -p, 0, q);
            acc += cpow(double(q), -rho) * mu_anchored(plf, Cusp(Int(-p), Int(q)), z, &g);
        }
    return acc / pz;
}

// Eigenvalue route: zeta(rho-s)^-1 zeta(rho+s)^-1 sum_{m<=M} lambda_m m^-rho
// with each lambda_m read off at a sample point in the cone Re z > m where
// the chain arguments stay well-conditioned.
template <typename LambdaAt>
cplx levy_mellin_eigen_route(cplx s, cplx rho, long M, LambdaAt&& lambda_at) {
    cplx acc = 0.0;
    for (long m = 1; m <= M; ++m)
        acc += lambda_at(m) * cpow(double(m), -rho);
    return acc / (hurwitz_zeta(rho - s, 1.0) * hurwitz_zeta(rho + s, 1.0));
}

}  // namespace msym
