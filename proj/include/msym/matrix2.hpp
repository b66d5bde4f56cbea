#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "msym/rational.hpp"

namespace msym {

// Integer 2x2 matrix (a b; c d).
struct Mat2 {
    Int a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(Int aa, Int bb, Int cc, Int dd)
        : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}

    Int det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    // adjugate; equals the inverse for det 1
    Mat2 adj() const { return Mat2(d, -b, -c, a); }

    std::string str() const {
        return "(" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + ")";
    }
};

inline bool in_S(const Mat2& g) {
    return g.det() == 1 && g.a >= 0 && g.b >= 0 && g.c >= 0 && g.d >= 0;
}

inline bool in_G(const Mat2& g) {
    if (g.det() == 0) return false;
    return g.c > 0 || (g.c == 0 && g.a > 0 && g.d > 0);
}

inline bool in_G_plus(const Mat2& g) {
    return in_G(g) && g.b >= 0 && g.d >= 0 && (g.a > 0 || (g.a == 0 && g.b > 0));
}

inline Cusp mobius_apply(const Mat2& g, const Cusp& x) {
    if (g.det() == 0) throw std::domain_error("mobius_apply: singular matrix");
    Int p = g.a * x.p + g.b * x.q;
    Int q = g.c * x.p + g.d * x.q;
    if (p == 0 && q == 0) throw std::domain_error("mobius_apply: degenerate image");
    return Cusp(p, q);
}

}  // namespace msym
