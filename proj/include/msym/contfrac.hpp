#pragma once

#include <stdexcept>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

// Euclidean continued fraction of a rational in [0,1), canonical form
// (the last partial quotient is >= 2, so the expansion is unique).
// Convergents are prepended with the formal pair 1/0, 0/1.
struct ContinuedFractionExpansion {
    Rational target;
    std::vector<Int> quotients;
    std::vector<Cusp> convergents;  // b_{-1}/d_{-1} = 1/0, b_0/d_0 = 0/1, ...

    int length() const { return static_cast<int>(quotients.size()); }
};

inline ContinuedFractionExpansion continued_fraction(const Rational& x) {
    if (x < Rational(0) || !(x < Rational(1)))
        throw std::domain_error("continued_fraction: target outside [0,1)");
    ContinuedFractionExpansion e;
    e.target = x;
    e.convergents.emplace_back(Int(1), Int(0));
    e.convergents.emplace_back(Int(0), Int(1));
    Int num = x.num, den = x.den;
    // Euclid on (den, num) yields [0; a1, a2, ...] with canonical tail
    Int b1 = 1, b0 = 0, d1 = 0, d0 = 1;  // (b_{-1}, b_0), (d_{-1}, d_0)
    Int a = den, b = num;
    while (b != 0) {
        Int q = a / b;
        Int r = a % b;
        a = b;
        b = r;
        e.quotients.push_back(q);
        Int bn = q * b0 + b1;
        Int dn = q * d0 + d1;
        b1 = b0;
        b0 = bn;
        d1 = d0;
        d0 = dn;
        e.convergents.emplace_back(bn, dn);
    }
    return e;
}

// Convergents of |beta| for chain construction. For x <= 1 this is the
// expansion above; for x > 1 the integer part enters as a0, so the row
// list starts 1/0, a0/1, ... without the 0/1 row.
inline ContinuedFractionExpansion convergents_of(const Rational& x) {
    if (x < Rational(0)) throw std::domain_error("convergents_of: negative");
    ContinuedFractionExpansion e;
    e.target = x;
    e.convergents.emplace_back(Int(1), Int(0));
    Int b1, b0, d1, d0;
    Int a, b;
    if (x < Rational(1) || x == Rational(1)) {
        e.convergents.emplace_back(Int(0), Int(1));
        b1 = 1, b0 = 0, d1 = 0, d0 = 1;
        a = x.den;
        b = x.num;
    } else {
        b1 = 0, b0 = 1, d1 = 1, d0 = 0;
        a = x.num;
        b = x.den;
    }
    while (b != 0) {
        Int q = a / b;
        Int r = a % b;
        a = b;
        b = r;
        e.quotients.push_back(q);
        Int bn = q * b0 + b1;
        Int dn = q * d0 + d1;
        b1 = b0;
        b0 = bn;
        d1 = d0;
        d0 = dn;
        e.convergents.emplace_back(bn, dn);
    }
    return e;
}

}  // namespace msym
