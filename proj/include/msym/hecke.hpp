#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "msym/hurwitz.hpp"
#include "msym/pseudo_measure.hpp"

namespace msym {

// ---------------------------------------------------------------------------
// Matrix families of determinant m
// ---------------------------------------------------------------------------

enum class HeckeVariant { standard, muehlenbruch, star1 };

// (a, -b; 0, d) with ad = m and 0 < b <= d.  |set| = sigma_1(m).
inline std::vector<Mat2> hecke_standard_set(long m) {
    if (m < 1) throw std::domain_error("hecke_standard_set: m must be positive");
    std::vector<Mat2> out;
    for (long a = 1; a <= m; ++a) {
        if (m % a) continue;
        long d = m / a;
        for (long b = 1; b <= d; ++b) out.emplace_back(a, -b, 0, d);
    }
    std::sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    });
    return out;
}

// (a, b; c, d) with ad - bc = m, a > c >= 0, d > b >= 0.
inline std::vector<Mat2> hecke_muehlenbruch_set(long m) {
    if (m < 1) throw std::domain_error("hecke_muehlenbruch_set: m must be positive");
    std::vector<Mat2> out;
    for (long a = 1; a <= m; ++a) {
        for (long d = 1; d <= m + 1 - a; ++d) {
            long k = a * d - m;
            if (k < 0) continue;
            if (k == 0) {
                for (long c = 0; c < a; ++c) out.emplace_back(a, 0, c, d);
                for (long b = 1; b < d; ++b) out.emplace_back(a, b, 0, d);
            } else {
                for (long b = 1; b < d; ++b) {
                    if (k % b) continue;
                    long c = k / b;
                    if (c < a) out.emplace_back(a, b, c, d);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    });
    return out;
}

// Brute enumeration used only to validate the generator above.
inline long muehlenbruch_count_brute(long m) {
    long n = 0;
    for (long a = 1; a <= m; ++a)
        for (long c = 0; c < a; ++c)
            for (long b = 0;; ++b) {
                // d > b with ad - bc = m forces b(a - c) < m
                if (b > 0 && b * (a - c) >= m) break;
                long num = m + b * c;
                if (num % a == 0 && num / a > b) ++n;
            }
    return n;
}

// Truncated family (1, b; 1, b+1), 0 <= b < B, approximating T*_1.
inline std::vector<Mat2> hecke_star1_set(long B) {
    if (B < 1) throw std::domain_error("hecke_star1_set: B must be positive");
    std::vector<Mat2> out;
    out.reserve(size_t(B));
    for (long b = 0; b < B; ++b) out.emplace_back(1, b, 1, b + 1);
    return out;
}

inline std::vector<Mat2> hecke_matrices(long m, HeckeVariant v, long B = 0) {
    switch (v) {
        case HeckeVariant::standard: return hecke_standard_set(m);
        case HeckeVariant::muehlenbruch: return hecke_muehlenbruch_set(m);
        case HeckeVariant::star1: return hecke_star1_set(B);
    }
    throw std::logic_error("hecke_matrices: bad variant");
}

inline long sigma_divisors(long m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) s += d;
    return s;
}

// ---------------------------------------------------------------------------
// Factorization of the standard representatives
// ---------------------------------------------------------------------------

// (a, -b; 0, d) -> (p, q, d1, d2) with b = p d1, d = q d1, a = d2,
// gcd(p, q) = 1, 0 < p <= q, m = d1 d2 q.
struct UpperTriangularFactors {
    long p, q, d1, d2;
};

inline UpperTriangularFactors factorize_upper_triangular(long a, long b, long d) {
    if (b <= 0 || b > d || a <= 0)
        throw std::domain_error("factorize_upper_triangular: need 0 < b <= d, a > 0");
    long d1 = std::gcd(b, d);
    return {b / d1, d / d1, d1, a};
}

// ---------------------------------------------------------------------------
// Eigenvalue extraction
// ---------------------------------------------------------------------------

struct HeckeEigenvalue {
    long m = 0;
    cplx lambda{0.0, 0.0};
    double z_spread = 0.0;  // max relative deviation of the ratio over z samples
};

namespace detail {
inline cplx psi_checked(const PeriodLikeFunction& plf, cplx z) {
    cplx v = plf.psi(z);
    if (std::abs(v) < 1e-10)
        throw std::domain_error("hecke_lambda: |psi(z)| below 1e-10, ratio ill-conditioned");
    return v;
}

inline HeckeEigenvalue spread_of(long m, const std::vector<cplx>& vals) {
    cplx mean = 0.0;
    for (cplx v : vals) mean += v;
    mean /= double(vals.size());
    double sp = 0.0;
    for (cplx v : vals) sp = std::max(sp, std::abs(v - mean));
    double scale = std::max(1e-300, std::abs(mean));
    return {m, mean, sp / scale};
}
}  // namespace detail

// Route through the anchored measure: sum over the standard set of
// mu(-inf, -b/d)|_s g, divided by psi(z).
inline cplx hecke_lambda_at(const PeriodLikeFunction& plf, long m, cplx z) {
    cplx acc = 0.0;
    for (const Mat2& g : hecke_standard_set(m)) {
        Cusp beta(g.b, g.d);  // -b/d
        acc += mu_anchored(plf, beta, z, &g);
    }
    return acc / detail::psi_checked(plf, z);
}

inline HeckeEigenvalue hecke_lambda(const PeriodLikeFunction& plf, long m,
                                    const std::vector<cplx>& zs) {
    if (zs.empty()) throw std::domain_error("hecke_lambda: empty sample set");
    std::vector<cplx> vals;
    vals.reserve(zs.size());
    for (cplx z : zs) vals.push_back(hecke_lambda_at(plf, m, z));
    return detail::spread_of(m, vals);
}

// Same sum rebracketed through the continued-fraction form: for each
// divisor pair the inner sum walks the chain of -b/d evaluated at
// X = (a z - b)/d, picking up (a/d)^s and the row factors directly.
inline cplx hecke_lambda_via_cf_at(const PeriodLikeFunction& plf, long m, cplx z) {
    cplx s = plf.s;
    cplx acc = 0.0;
    for (const Mat2& g : hecke_standard_set(m)) {
        double a = g.a.convert_to<double>();
        double b = -g.b.convert_to<double>();
        double d = g.d.convert_to<double>();
        cplx X = (a * z - b) / d;
        cplx pref = cpow(a / d, s);
        cplx inner = 0.0;
        for (const auto& st : primitive_chain_to(Cusp(g.b, g.d)).steps) {
            cplx W = mobius_point(st.g, X);
            double upr = st.g.a.convert_to<double>();
            double crw = st.g.c.convert_to<double>();
            inner += double(st.sign) * cpow(upr - crw * W, 2.0 * s) * plf.psi(W);
        }
        acc += pref * inner;
    }
    return acc / detail::psi_checked(plf, z);
}

inline HeckeEigenvalue hecke_lambda_via_cf(const PeriodLikeFunction& plf, long m,
                                           const std::vector<cplx>& zs) {
    if (zs.empty()) throw std::domain_error("hecke_lambda_via_cf: empty sample set");
    std::vector<cplx> vals;
    vals.reserve(zs.size());
    for (cplx z : zs) vals.push_back(hecke_lambda_via_cf_at(plf, m, z));
    return detail::spread_of(m, vals);
}

// Route through the nonnegative family: psi|_s T_m / psi.
inline cplx hecke_lambda_via_set_at(const PeriodLikeFunction& plf, long m, cplx z) {
    cplx acc = 0.0;
    for (const Mat2& g : hecke_muehlenbruch_set(m)) acc += slash_point(plf.psi, plf.s, g, z);
    return acc / detail::psi_checked(plf, z);
}

inline HeckeEigenvalue hecke_lambda_via_set(const PeriodLikeFunction& plf, long m,
                                            const std::vector<cplx>& zs) {
    if (zs.empty()) throw std::domain_error("hecke_lambda_via_set: empty sample set");
    std::vector<cplx> vals;
    vals.reserve(zs.size());
    for (cplx z : zs) vals.push_back(hecke_lambda_via_set_at(plf, m, z));
    return detail::spread_of(m, vals);
}

// ---------------------------------------------------------------------------
// Composition law by coset reduction
// ---------------------------------------------------------------------------

namespace detail {
// Left-reduce an integer matrix of positive determinant to its upper
// triangular coset representative (A, B; 0, D), 0 <= B < D, A > 0.
inline std::tuple<long, long, long> hnf_coset(long a, long b, long c, long d) {
    long det = a * d - b * c;
    if (det <= 0) throw std::domain_error("hnf_coset: determinant must be positive");
    long A, B;
    if (c == 0) {
        if (a < 0) { a = -a; b = -b; d = -d; }
        A = a;
        B = b;
    } else {
        // extended gcd: x a + y c = g
        long x = 1, y = 0, x1 = 0, y1 = 1, r0 = a, r1 = c;
        while (r1 != 0) {
            long q = r0 / r1;
            std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
            std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
            std::tie(y, y1) = std::make_tuple(y1, y - q * y1);
        }
        long g = r0;
        if (g < 0) { g = -g; x = -x; y = -y; }
        A = g;
        B = x * b + y * d;
    }
    long D = det / A;
    B %= D;
    if (B < 0) B += D;
    return {A, B, D};
}
}  // namespace detail

// One term lambda_{mn/e^2} with multiplicity in the derived law.
struct CompositionTerm {
    long e;
    long coeff;
    long target;
};

// Derive lambda_m lambda_n = sum_e coeff_e lambda_{mn/e^2} by reducing all
// pairwise products of standard representatives to upper triangular
// determinant-mn coset representatives and tallying.  A class of content f
// is e times a determinant-mn/e^2 class for every e | f, and the scalar e
// acts trivially under the weight-s slash, so the per-content counts peel
// into the law coefficients by divisor subtraction.
inline std::vector<CompositionTerm> hecke_composition_law(long m, long n) {
    std::map<std::tuple<long, long, long>, long> tally;
    for (const Mat2& gm : hecke_standard_set(m))
        for (const Mat2& gn : hecke_standard_set(n)) {
            Mat2 pr = gm * gn;
            tally[detail::hnf_coset(pr.a.convert_to<long>(), pr.b.convert_to<long>(),
                                    pr.c.convert_to<long>(), pr.d.convert_to<long>())]++;
        }
    if (long(tally.size()) != sigma_divisors(m * n))
        throw std::runtime_error("hecke_composition_law: some determinant-mn class is missing");

    // counts must be constant on each content stratum
    std::map<long, long> stratum;  // content -> count
    for (auto& [rep, cnt] : tally) {
        auto [A, B, D] = rep;
        long f = std::gcd(A, std::gcd(B, D));
        auto it = stratum.find(f);
        if (it == stratum.end())
            stratum[f] = cnt;
        else if (it->second != cnt)
            throw std::runtime_error("hecke_composition_law: nonuniform multiplicity");
    }

    // count(content f) = sum_{e | f} c_e; solve upward in f
    std::map<long, long> coeff;
    for (auto& [f, cnt] : stratum) {
        long acc = 0;
        for (auto& [e, ce] : coeff)
            if (f % e == 0) acc += ce;
        coeff[f] = cnt - acc;
    }

    std::vector<CompositionTerm> law;
    long total = 0;
    for (auto& [e, ce] : coeff) {
        if (ce < 0 || (m * n) % (e * e) != 0)
            throw std::runtime_error("hecke_composition_law: inconsistent content stratum");
        long target = m * n / (e * e);
        if (ce > 0) law.push_back({e, ce, target});
        total += ce * sigma_divisors(target);
    }
    if (total != sigma_divisors(m) * sigma_divisors(n))
        throw std::runtime_error("hecke_composition_law: multiset size mismatch");
    return law;
}

// ---------------------------------------------------------------------------
// T*_1 and the full-orbit identity
// ---------------------------------------------------------------------------

struct TStar1Result {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    long B = 0;
};

// psi|T*_1 (z) approximated by the first B terms of the (1,b;1,b+1) family.
// When tail_derivs (Taylor coefficients d_j of psi(1 - u) in u) are
// supplied, the omitted tail sum_{b>=B} (z+b+1)^{-2s} psi((z+b)/(z+b+1))
// is replaced by its expansion sum_j (-1)^j d_j zeta_H(2s + j, z + B + 1).
inline TStar1Result tstar1_apply(const PeriodLikeFunction& plf, cplx z, long B,
                                 const std::vector<cplx>* tail_derivs = nullptr) {
    cplx s = plf.s;
    cplx acc = 0.0;
    for (long b = 0; b < B; ++b) {
        cplx den = z + double(b) + 1.0;
        acc += cpow(den, -2.0 * s) * plf.psi((z + double(b)) / den);
    }
    TStar1Result r;
    r.B = B;
    if (tail_derivs) {
        for (size_t j = 0; j < tail_derivs->size(); ++j)
            acc += (j % 2 ? -1.0 : 1.0) * (*tail_derivs)[j] *
                   hurwitz_zeta(2.0 * s + double(j), z + double(B) + 1.0);
        r.tail_bound = std::pow(std::abs(z + double(B)), -2.0 * s.real() -
                                                             double(tail_derivs->size()));
    } else {
        r.tail_bound = std::pow(std::abs(z + double(B)), -2.0 * s.real());
    }
    r.value = acc;
    return r;
}

// The four-factor word in translations and the inversion, computed exactly.
inline Mat2 translation_conjugation_product(long n) {
    Mat2 inv(0, 1, 1, 0), t1(1, 1, 0, 1), w(0, 1, 1, n), tm(1, -1, 0, 1);
    return inv * t1 * w * tm;
}

// The stated closed form (1, n-1; 0, n) has determinant n while the word has
// determinant -1 * 1 * -1 * 1 = 1; the two can never match.  Returns whether
// the claim holds over 1 <= n <= 100 (it does not) so callers can report the
// actual product (1, n-1; 1, n) honestly.
inline bool translation_product_claim_holds(long n_max = 100) {
    for (long n = 1; n <= n_max; ++n) {
        Mat2 got = translation_conjugation_product(n);
        Mat2 want(1, n - 1, 0, n);
        if (!(got.a == want.a && got.b == want.b && got.c == want.c && got.d == want.d))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Averaged-measure identity
// ---------------------------------------------------------------------------

struct AveragedMeasureReport {
    cplx rho{0.0, 0.0};
    long M = 0, Q = 0;
    cplx zeta_minus{0.0, 0.0};  // zeta(rho - s)
    cplx zeta_plus{0.0, 0.0};   // zeta(rho + s)
    std::vector<cplx> zs, lhs, rhs;
    std::vector<double> rel_gap;
};

// Compare sum_{m<=M} m^-rho (psi | T_m-sum) against
// zeta(rho-s) zeta(rho+s) sum_{q<=Q} sum_{p<=q, (p,q)=1} q^-rho
//   (mu(-inf,-p/q) |_s (1,-p;0,q)).
inline AveragedMeasureReport averaged_measure_check(const PeriodLikeFunction& plf, cplx rho, long M,
                                       long Q, const std::vector<cplx>& zs) {
    AveragedMeasureReport rep;
    rep.rho = rho;
    rep.M = M;
    rep.Q = Q;
    rep.zs = zs;
    cplx s = plf.s;
    rep.zeta_minus = hurwitz_zeta(rho - s, 1.0);
    rep.zeta_plus = hurwitz_zeta(rho + s, 1.0);

    for (cplx z : zs) {
        cplx lhs = 0.0;
        for (long m = 1; m <= M; ++m) {
            cplx term = 0.0;
            for (const Mat2& g : hecke_standard_set(m))
                term += mu_anchored(plf, Cusp(g.b, g.d), z, &g);
            lhs += cpow(double(m), -rho) * term;
        }
        cplx rhs = 0.0;
        for (long q = 1; q <= Q; ++q) {
            for (long p = 1; p <= q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                Mat2 g(1, -p, 0, q);
                rhs += cpow(double(q), -rho) * mu_anchored(plf, Cusp(Int(-p), Int(q)), z, &g);
            }
        }
        rhs *= rep.zeta_minus * rep.zeta_plus;
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.rel_gap.push_back(std::abs(lhs - rhs) /
                              std::max({1e-300, std::abs(lhs), std::abs(rhs)}));
    }
    return rep;
}

}  // namespace msym
