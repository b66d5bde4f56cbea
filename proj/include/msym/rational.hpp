#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace msym {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduced fraction with positive denominator.
struct Rational {
    Int num;
    Int den;

    Rational() : num(0), den(1) {}
    Rational(Int n) : num(std::move(n)), den(1) {}
    Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    Rational(long n) : num(n), den(1) {}
    Rational(long n, long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = int_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const {
        return num.convert_to<double>() / den.convert_to<double>();
    }

    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int l = a.num * b.den, r = b.num * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

// Exact rational from a double (every finite double is p / 2^k).
inline Rational rational_from_double(double x) {
    if (x != x) throw std::domain_error("rational_from_double: nan");
    Rational r(0);
    int sign = x < 0 ? -1 : 1;
    x = x < 0 ? -x : x;
    Int den = 1;
    while (x != static_cast<double>(static_cast<long long>(x))) {
        x *= 2.0;
        den *= 2;
        if (den > Int(1) << 1100) throw std::domain_error("rational_from_double");
    }
    r.num = sign * Int(static_cast<long long>(x));
    r.den = den;
    r.reduce();
    return r;
}

// Point of P^1(Q): q >= 0, reduced, and infinity stored as (1, 0).
struct Cusp {
    Int p;
    Int q;

    Cusp() : p(1), q(0) {}
    Cusp(Int pp, Int qq) : p(std::move(pp)), q(std::move(qq)) { normalize(); }
    Cusp(const Rational& r) : p(r.num), q(r.den) {}

    void normalize() {
        if (q == 0) {
            if (p == 0) throw std::domain_error("Cusp: 0/0");
            p = 1;
            return;
        }
        if (q < 0) {
            p = -p;
            q = -q;
        }
        Int g = int_gcd(p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
    }

    bool is_infinity() const { return q == 0; }

    Rational value() const {
        if (q == 0) throw std::domain_error("Cusp: infinity has no value");
        return Rational(p, q);
    }

    std::string str() const {
        if (q == 0) return "inf";
        std::string s = p.str();
        if (q != 1) s += "/" + q.str();
        return s;
    }

    friend bool operator==(const Cusp& a, const Cusp& b) {
        return a.p == b.p && a.q == b.q;
    }
};

inline Cusp cusp_infinity() { return Cusp(); }

}  // namespace msym
