#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "msym/cpow.hpp"
#include "msym/hurwitz.hpp"
#include "msym/rational.hpp"

namespace msym {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Discretization of h -> sum_{n>=1} (z+n)^{-2s} h(1/(z+n)) collocated at
// Chebyshev nodes on (0,1). `basis` records which expansion the columns use.
struct TransferOperatorModel {
    cplx s;
    int N = 0;
    std::string basis;
    std::vector<double> nodes;
    CMatrix A;  // operator applied to basis functions, sampled at nodes
    CMatrix V;  // basis functions sampled at nodes
    CMatrix M;  // V^{-1} A
};

inline std::vector<double> chebyshev_nodes01(int N) {
    std::vector<double> x(N);
    for (int i = 0; i < N; ++i) x[i] = 0.5 * (1.0 + std::cos(M_PI * (2 * i + 1) / (2.0 * N)));
    return x;
}

// Integer coefficient rows of the shifted polynomials: row k holds the
// expansion T_k(2u-1) = sum_j D[k][j] u^j.
inline std::vector<std::vector<Int>> shifted_chebyshev_rows(int kmax) {
    std::vector<std::vector<Int>> D;
    D.push_back({Int(1)});
    if (kmax >= 1) D.push_back({Int(-1), Int(2)});
    for (int k = 1; k < kmax; ++k) {
        const auto& a = D[k];
        const auto& b = D[k - 1];
        std::vector<Int> nxt(k + 2, Int(0));
        for (size_t j = 0; j < a.size(); ++j) {
            nxt[j + 1] += 4 * a[j];
            nxt[j] -= 2 * a[j];
        }
        for (size_t j = 0; j < b.size(); ++j) nxt[j] -= b[j];
        D.push_back(std::move(nxt));
    }
    return D;
}

inline void check_transfer_pole(cplx s, int kmax) {
    for (int k = 0; k < kmax; ++k) {
        cplx w = 2.0 * s + double(k);
        if (w == cplx(1.0, 0.0))
            throw std::domain_error("transfer_matrix: 2s+k = 1 at k=" + std::to_string(k));
    }
}

// Compute path: columns are T_k(2x-1); the n-sum is taken explicitly up to
// n0 and the remainder enters exactly through Hurwitz-zeta values against
// the integer coefficient rows.
inline TransferOperatorModel transfer_matrix(cplx s, int N, int n0 = 256, int jmax = 40) {
    if (N < 8) throw std::domain_error("transfer_matrix: N >= 8 required");
    check_transfer_pole(s, std::min(jmax, N));
    TransferOperatorModel model;
    model.s = s;
    model.N = N;
    model.basis = "chebyshev";
    model.nodes = chebyshev_nodes01(N);
    const auto& x = model.nodes;
    model.V = CMatrix(N, N);
    for (int i = 0; i < N; ++i) {
        double t = 2.0 * x[i] - 1.0;
        double tm = 1.0, tc = t;
        for (int k = 0; k < N; ++k) {
            model.V(i, k) = k == 0 ? 1.0 : tc;
            if (k >= 1) {
                double tn = 2.0 * t * tc - tm;
                tm = tc;
                tc = tn;
            }
        }
    }
    model.A = CMatrix::Zero(N, N);
    cplx twos = 2.0 * s;
    std::vector<double> tk(N);
    for (int n = 1; n < n0; ++n) {
        for (int i = 0; i < N; ++i) {
            double xn = x[i] + n;
            double t = 2.0 / xn - 1.0;
            cplx w = std::exp(-twos * std::log(xn));
            double tm = 1.0, tc = t;
            for (int k = 0; k < N; ++k) {
                double tv = k == 0 ? 1.0 : tc;
                model.A(i, k) += w * tv;
                if (k >= 1) {
                    double tn = 2.0 * t * tc - tm;
                    tm = tc;
                    tc = tn;
                }
            }
        }
    }
    int jm = std::min(jmax, N);
    auto D = shifted_chebyshev_rows(N - 1);
    std::vector<std::vector<double>> Dm(N, std::vector<double>(jm, 0.0));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < jm && j < (int)D[k].size(); ++j)
            Dm[k][j] = D[k][j].convert_to<double>();
    for (int i = 0; i < N; ++i) {
        std::vector<cplx> Z(jm);
        for (int j = 0; j < jm; ++j) Z[j] = hurwitz_zeta(twos + double(j), cplx(x[i] + n0, 0.0));
        for (int k = 0; k < N; ++k) {
            cplx acc = 0.0;
            for (int j = 0; j < jm; ++j) acc += Z[j] * Dm[k][j];
            model.A(i, k) += acc;
        }
    }
    model.M = model.V.partialPivLu().solve(model.A);
    return model;
}

// Contract model: columns are monomials w^k, so the operator columns are
// exact zeta values, A[i][k] = zeta_H(2s+k, x_i+1). Conditioning limits it
// to small N; it cross-validates the compute path by similarity.
inline TransferOperatorModel transfer_matrix_monomial(cplx s, int N) {
    if (N < 8) throw std::domain_error("transfer_matrix_monomial: N >= 8 required");
    check_transfer_pole(s, N);
    TransferOperatorModel model;
    model.s = s;
    model.N = N;
    model.basis = "monomial";
    model.nodes = chebyshev_nodes01(N);
    const auto& x = model.nodes;
    model.A = CMatrix(N, N);
    model.V = CMatrix(N, N);
    for (int i = 0; i < N; ++i) {
        double p = 1.0;
        for (int k = 0; k < N; ++k) {
            model.A(i, k) = hurwitz_zeta(2.0 * s + double(k), cplx(x[i] + 1.0, 0.0));
            model.V(i, k) = p;
            p *= x[i];
        }
    }
    model.M = model.V.partialPivLu().solve(model.A);
    return model;
}

struct TransferSpectrum {
    CVector values;
    CMatrix vectors;
};

inline TransferSpectrum transfer_spectrum(const TransferOperatorModel& model) {
    Eigen::ComplexEigenSolver<CMatrix> es(model.M);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("transfer_spectrum: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

inline int nearest_eigen_index(const CVector& lambda, cplx target) {
    int best = 0;
    double bd = std::abs(lambda(0) - target);
    for (int i = 1; i < lambda.size(); ++i) {
        double d = std::abs(lambda(i) - target);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

// Spectral hit: the eigenvector is stored in the same basis the model used.
struct EigenDatum {
    double R = 0.0;
    int parity = 0;
    int N = 0;
    double residual = 0.0;
    std::vector<cplx> coeffs;
};

template <typename F>
double golden_min(F&& f, double a, double b, double tol = 1e-7, int maxit = 60) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < maxit && b - a >= tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

inline double eigen_gap_at(double R, int parity, int N) {
    auto model = transfer_matrix(cplx(0.5, R), N);
    auto spec = transfer_spectrum(model);
    int idx = nearest_eigen_index(spec.values, cplx(double(parity), 0.0));
    return std::abs(spec.values(idx) - cplx(double(parity), 0.0));
}

// Grid scan for parity-signed eigenvalue crossings on the critical line,
// refined by golden-section. A refined minimum qualifies only when its
// residual drops below 1e-6; grid minima above 0.05 are not refined at all.
inline std::vector<EigenDatum> eigen_search(int parity, double r0, double r1, int N,
                                            double grid_step = 0.05) {
    if (parity != 1 && parity != -1) throw std::domain_error("eigen_search: parity must be +-1");
    if (grid_step > 0.05 + 1e-15) throw std::domain_error("eigen_search: grid_step <= 0.05");
    std::vector<double> rs;
    for (double r = r0; r <= r1 + 0.5 * grid_step; r += grid_step) rs.push_back(r);
    std::vector<double> fs(rs.size());
    for (size_t i = 0; i < rs.size(); ++i) fs[i] = eigen_gap_at(rs[i], parity, N);
    std::vector<EigenDatum> hits;
    for (size_t j = 1; j + 1 < rs.size(); ++j) {
        if (!(fs[j] < fs[j - 1] && fs[j] < fs[j + 1] && fs[j] < 0.05)) continue;
        auto f1 = [&](double R) { return eigen_gap_at(R, parity, N); };
        double Rstar = golden_min(f1, rs[j - 1], rs[j + 1]);
        auto model = transfer_matrix(cplx(0.5, Rstar), N);
        auto spec = transfer_spectrum(model);
        int idx = nearest_eigen_index(spec.values, cplx(double(parity), 0.0));
        double res = std::abs(spec.values(idx) - cplx(double(parity), 0.0));
        if (res >= 1e-6) continue;
        EigenDatum e;
        e.R = Rstar;
        e.parity = parity;
        e.N = N;
        e.residual = res;
        CVector v = spec.vectors.col(idx);
        int k0 = 0;
        for (int k = 1; k < v.size(); ++k)
            if (std::abs(v(k)) > std::abs(v(k0))) k0 = k;
        v /= v(k0);
        e.coeffs.assign(v.data(), v.data() + v.size());
        hits.push_back(std::move(e));
    }
    return hits;
}

}  // namespace msym
