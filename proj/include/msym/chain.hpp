#pragma once

#include <stdexcept>
#include <vector>

#include "msym/contfrac.hpp"
#include "msym/matrix2.hpp"
#include "msym/rational.hpp"

namespace msym {

struct NotPrimitive : std::domain_error {
    using std::domain_error::domain_error;
};

// Ordered pair of cusps; orientation is part of the identity.
struct OrientedSegment {
    Cusp start;
    Cusp end;
};

// start = g^{-1}(-inf) = -d/c (or -inf when c = 0), end = g^{-1}(0) = -b/a.
inline OrientedSegment segment_from_matrix(const Mat2& g) {
    if (!in_S(g)) throw std::domain_error("segment_from_matrix: matrix not in S");
    OrientedSegment seg;
    seg.start = g.c == 0 ? cusp_infinity() : Cusp(-g.d, g.c);
    seg.end = Cusp(-g.b, g.a);
    return seg;
}

inline bool is_left(const OrientedSegment& seg) {
    auto ok = [](const Cusp& c) {
        return c.is_infinity() || c.p * c.q <= 0;  // value <= 0
    };
    return ok(seg.start) && ok(seg.end);
}

inline Mat2 matrix_from_segment(const OrientedSegment& seg) {
    // solve -d/c = start, -b/a = end with det 1
    if (seg.end.is_infinity()) throw NotPrimitive("matrix_from_segment: end at infinity");
    Int a = seg.end.q, b = -seg.end.p;
    Int c, d;
    if (seg.start.is_infinity()) {
        c = 0;
        d = 1;
    } else {
        c = seg.start.q;
        d = -seg.start.p;
    }
    Mat2 g(a, b, c, d);
    if (g.det() != 1 || !in_S(g))
        throw NotPrimitive("matrix_from_segment: segment is not left primitive");
    return g;
}

inline bool is_left_primitive(const OrientedSegment& seg) {
    try {
        matrix_from_segment(seg);
        return true;
    } catch (const NotPrimitive&) {
        return false;
    }
}

// The two halves obtained by inserting the Farey mediant; the halves'
// matrices are Tg and T'g for the parent's matrix g.
inline std::pair<OrientedSegment, OrientedSegment> mediant_split(const OrientedSegment& seg) {
    Mat2 g = matrix_from_segment(seg);
    Mat2 T(1, 1, 0, 1), Tp(1, 0, 1, 1);
    return {segment_from_matrix(T * g), segment_from_matrix(Tp * g)};
}

struct ChainStep {
    int sign;  // +1 or -1
    Mat2 g;
};

struct PrimitiveChain {
    Cusp alpha;  // always -inf here
    Cusp beta;
    std::vector<ChainStep> steps;
};

// Chain of primitive segments telescoping (-inf, beta), beta <= 0, built on
// the convergents of |beta|. Step k carries sign (-1)^k and the matrix
// assembled from the two convergent rows selected by the parity rule.
inline PrimitiveChain primitive_chain_to(const Cusp& beta) {
    if (beta.is_infinity()) throw std::domain_error("primitive_chain_to: beta must be finite");
    if (beta.p > 0) throw std::domain_error("primitive_chain_to: beta must be <= 0");
    PrimitiveChain chain;
    chain.alpha = cusp_infinity();
    chain.beta = beta;
    Rational absbeta(-beta.p, beta.q);
    auto e = convergents_of(absbeta);
    int n = static_cast<int>(e.convergents.size()) - 2;  // rows -1..n
    auto B = [&](int k) { return e.convergents[k + 1].p; };
    auto D = [&](int k) { return e.convergents[k + 1].q; };
    for (int k = 0; k <= n; ++k) {
        // eps_k = 1 for even k, 0 for odd k
        int et = (k + 1) % 2 == 0 ? 1 : 0;
        int eb = k % 2 == 0 ? 1 : 0;
        Mat2 g(D(k - et), B(k - et), D(k - eb), B(k - eb));
        if (!in_S(g))
            throw std::domain_error("primitive_chain_to: step outside S at k=" + std::to_string(k));
        chain.steps.push_back({k % 2 == 0 ? 1 : -1, g});
    }
    return chain;
}

}  // namespace msym
