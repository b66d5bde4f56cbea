#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "msym/analytic.hpp"
#include "msym/chain.hpp"
#include "msym/period_like.hpp"

namespace msym {

// Finitely additive measure on rational segments sourced from one
// period-like function; values are point evaluations in z.
struct PseudoMeasure {
    PeriodLikeFunction source;
};

// One slash evaluation |det|^s (cz+d)^{-2s} psi(gz) against a bare callable.
template <typename Psi>
cplx slash_point(Psi&& psi, cplx s, const Mat2& g, cplx z) {
    double a = g.a.convert_to<double>(), b = g.b.convert_to<double>();
    double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
    cplx den = c * z + d;
    if (den == cplx(0.0, 0.0))
        throw EvaluationOutsideDomain("slash_point: pole of the fractional map");
    double dets = std::abs(g.det().convert_to<double>());
    return cpow(dets, s) * cpow(den, -2.0 * s) * psi((a * z + b) / den);
}

// Measure of one primitive segment as an analytic object: psi|_s g, which
// stays in F0 because g has nonnegative entries.
inline AnalyticFunction mu_primitive(const PseudoMeasure& m, const Mat2& g) {
    if (!in_S(g)) throw std::domain_error("mu_primitive: matrix not in S");
    return slash(m.source.psi, g, m.source.s);
}

// Value of a signed segment list at z, optionally right-composed with a
// fixed matrix (used by the Hecke sums).
template <typename Psi>
cplx steps_value(Psi&& psi, cplx s, const std::vector<ChainStep>& steps, cplx z,
                 const Mat2* post = nullptr) {
    cplx acc = 0.0;
    for (const auto& st : steps) {
        Mat2 g = post ? st.g * *post : st.g;
        acc += double(st.sign) * slash_point(psi, s, g, z);
    }
    return acc;
}

// Endpoints in (0, inf) contribute nothing; the anchored value clamps them
// to 0 before building the chain.
inline Cusp clamp_left(const Cusp& c) {
    if (c.is_infinity()) return c;
    if (c.p > 0) return Cusp(Int(0), Int(1));
    return c;
}

// mu(-inf, beta)(z) through the canonical chain.
inline cplx mu_anchored(const PeriodLikeFunction& plf, const Cusp& beta, cplx z,
                        const Mat2* post = nullptr) {
    Cusp b = clamp_left(beta);
    if (b.is_infinity()) return 0.0;
    auto chain = primitive_chain_to(b);
    return steps_value(plf.psi, plf.s, chain.steps, z, post);
}

// mu(alpha, beta)(z) = mu(-inf, beta)(z) - mu(-inf, alpha)(z).
inline cplx mu(const PseudoMeasure& m, const Cusp& alpha, const Cusp& beta, cplx z) {
    return mu_anchored(m.source, beta, z) - mu_anchored(m.source, alpha, z);
}

// Signed steps for mu(alpha, beta): chain to beta plus the reversed chain to
// alpha. This is the object the refinement tests rewrite.
inline std::vector<ChainStep> segment_steps(const Cusp& alpha, const Cusp& beta) {
    std::vector<ChainStep> steps;
    Cusp b = clamp_left(beta), a = clamp_left(alpha);
    if (!b.is_infinity())
        for (auto& st : primitive_chain_to(b).steps) steps.push_back(st);
    if (!a.is_infinity())
        for (auto& st : primitive_chain_to(a).steps) steps.push_back({-st.sign, st.g});
    return steps;
}

// Replace one random step by its two mediant halves (same signs); the
// telescoped value is unchanged exactly when the source satisfies the
// three-term equation.
template <typename Rng>
std::vector<ChainStep> refine_steps_once(const std::vector<ChainStep>& steps, Rng& rng) {
    if (steps.empty()) return steps;
    std::uniform_int_distribution<size_t> pick(0, steps.size() - 1);
    size_t i = pick(rng);
    Mat2 T(1, 1, 0, 1), Tp(1, 0, 1, 1);
    std::vector<ChainStep> out;
    out.reserve(steps.size() + 1);
    for (size_t j = 0; j < steps.size(); ++j) {
        if (j == i) {
            out.push_back({steps[j].sign, T * steps[j].g});
            out.push_back({steps[j].sign, Tp * steps[j].g});
        } else {
            out.push_back(steps[j]);
        }
    }
    return out;
}

}  // namespace msym
