#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "msym/cpow.hpp"
#include "msym/matrix2.hpp"

namespace msym {

struct OutsideDefinitionDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct EvaluationOutsideDomain : std::domain_error {
    using std::domain_error::domain_error;
};

// Function holomorphic off the cut (-inf, branch_point]; evaluator plus
// branch point, not a symbolic tree. Membership in F0 means the cut can be
// taken at 0 or to its left.
struct AnalyticFunction {
    std::function<cplx(cplx)> evaluate;
    double branch_point = 0.0;
    std::string descriptor;

    cplx operator()(cplx z) const {
        if (z.imag() == 0.0 && z.real() <= branch_point)
            throw EvaluationOutsideDomain("evaluation point on the cut: " + descriptor);
        return evaluate(z);
    }

    bool in_F0() const { return branch_point <= 0.0; }
};

// The inequality is evaluated literally for any integer matrix with nonzero
// determinant; membership of the result in F0 is a separate question handled
// by the caller (see slash).
inline bool in_definition_domain(const AnalyticFunction& phi, const Mat2& g) {
    if (g.det() == 0) return false;
    double r = phi.branch_point;
    double a = g.a.convert_to<double>(), b = g.b.convert_to<double>();
    double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
    double lhs = a - c * r;
    if (lhs > 0.0) return true;
    return lhs == 0.0 && d * r - b < 0.0;
}

inline cplx mobius_point(const Mat2& g, cplx z) {
    double a = g.a.convert_to<double>(), b = g.b.convert_to<double>();
    double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
    return (a * z + b) / (c * z + d);
}

// (phi |_s g)(z) = |det g|^s (cz+d)^{-2s} phi(gz). The new branch point is
// g^{-1} applied to the old cut endpoint when that lands at a finite point,
// else 0; the choice is spot-validated at construction.
inline AnalyticFunction slash(const AnalyticFunction& phi, const Mat2& g, cplx s) {
    if (!in_definition_domain(phi, g))
        throw OutsideDefinitionDomain("slash: matrix outside the definition domain of " +
                                      phi.descriptor);
    double a = g.a.convert_to<double>(), b = g.b.convert_to<double>();
    double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
    double r = phi.branch_point;
    double rp = 0.0;
    if (a - c * r != 0.0) rp = (d * r - b) / (a - c * r);
    double dets = std::abs(g.det().convert_to<double>());
    AnalyticFunction out;
    out.branch_point = rp;
    out.descriptor = phi.descriptor + "|" + g.str();
    auto base = std::make_shared<AnalyticFunction>(phi);
    out.evaluate = [base, a, b, c, d, dets, s](cplx z) {
        cplx den = c * z + d;
        if (den == cplx(0.0, 0.0))
            throw EvaluationOutsideDomain("slash: pole of the fractional map");
        cplx w = (a * z + b) / den;
        return cpow(dets, s) * cpow(den, -2.0 * s) * (*base)(w);
    };
    // spot validation of the propagated branch point
    for (double t : {0.7, 1.3, 2.1}) {
        cplx z(rp + t, 0.11 * t);
        cplx w = mobius_point(g, z);
        if (w.imag() == 0.0 && w.real() <= r)
            throw OutsideDefinitionDomain("slash: branch propagation failed for " +
                                          out.descriptor);
    }
    return out;
}

// One evaluation without materializing the composed function.
inline cplx slash_eval(const AnalyticFunction& phi, const Mat2& g, cplx s, cplx z) {
    double a = g.a.convert_to<double>(), b = g.b.convert_to<double>();
    double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
    cplx den = c * z + d;
    if (den == cplx(0.0, 0.0))
        throw EvaluationOutsideDomain("slash_eval: pole of the fractional map");
    cplx w = (a * z + b) / den;
    double dets = std::abs(g.det().convert_to<double>());
    return cpow(dets, s) * cpow(den, -2.0 * s) * phi(w);
}

}  // namespace msym
