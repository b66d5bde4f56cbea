#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "msym/transfer.hpp"

using namespace msym;

TEST(ChebBasis, NodesLieInUnitIntervalAndAreOrdered) {
    auto x = chebyshev_nodes01(17);
    ASSERT_EQ(x.size(), 17u);
    for (size_t i = 0; i < x.size(); ++i) {
        EXPECT_GT(x[i], 0.0);
        EXPECT_LT(x[i], 1.0);
        if (i) EXPECT_LT(x[i], x[i - 1]);
    }
}

TEST(ChebBasis, ShiftedRowsMatchKnownPolynomials) {
    // T*_2(x) = 8x^2 - 8x + 1, T*_3(x) = 32x^3 - 48x^2 + 18x - 1.
    auto rows = shifted_chebyshev_rows(3);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[2][0], Int(1));
    EXPECT_EQ(rows[2][1], Int(-8));
    EXPECT_EQ(rows[2][2], Int(8));
    EXPECT_EQ(rows[3][0], Int(-1));
    EXPECT_EQ(rows[3][1], Int(18));
    EXPECT_EQ(rows[3][2], Int(-48));
    EXPECT_EQ(rows[3][3], Int(32));
}

TEST(ChebBasis, PoleGuardRejectsHalfIntegerShift) {
    EXPECT_THROW(check_transfer_pole(cplx(0.5, 0.0), 10), std::domain_error);
    EXPECT_THROW(check_transfer_pole(cplx(-1.5, 0.0), 10), std::domain_error);
    EXPECT_NO_THROW(check_transfer_pole(cplx(0.5, 9.5), 10));
    EXPECT_NO_THROW(check_transfer_pole(cplx(1.0, 0.0), 10));
}

TEST(GaussKuzminWirsing, LeadingEigenpairAtSEqualsOne) {
    for (int N : {30, 40}) {
        auto model = transfer_matrix(cplx(1.0, 0.0), N);
        auto spec = transfer_spectrum(model);
        int idx = nearest_eigen_index(spec.values, cplx(1.0, 0.0));
        EXPECT_LT(std::abs(spec.values(idx) - cplx(1.0, 0.0)), 1e-10) << "N=" << N;

        // Eigenfunction values at the nodes, against c/(1+x).
        CVector vals = model.V * spec.vectors.col(idx);
        cplx scale = vals(0) * (1.0 + model.nodes[0]);
        for (int i = 0; i < N; ++i) {
            cplx want = scale / (1.0 + model.nodes[i]);
            EXPECT_LT(std::abs(vals(i) - want), 1e-8) << "N=" << N << " node " << i;
        }
    }
}

TEST(GaussKuzminWirsing, SubleadingEigenvalueStableUnderBasisGrowth) {
    double got[2];
    int cases[2] = {30, 40};
    for (int c = 0; c < 2; ++c) {
        auto model = transfer_matrix(cplx(1.0, 0.0), cases[c]);
        auto spec = transfer_spectrum(model);
        // Second largest modulus.
        int i1 = nearest_eigen_index(spec.values, cplx(1.0, 0.0));
        double best = 0.0;
        for (int i = 0; i < spec.values.size(); ++i) {
            if (i == i1) continue;
            best = std::max(best, std::abs(spec.values(i)));
        }
        got[c] = best;
        EXPECT_NEAR(best, 0.3036630029, 1e-6) << "N=" << cases[c];
    }
    EXPECT_LT(std::abs(got[0] - got[1]), 1e-9);
}

TEST(TransferModel, ChebyshevAndMonomialModelsAgreeSpectrally) {
    // Same operator in two bases. The monomial collocation matrix is badly
    // conditioned, so agreement degrades down the spectrum; the dominant
    // eigenvalues are the meaningful comparison.
    auto spectra = [](cplx s) {
        auto sc = transfer_spectrum(transfer_matrix(s, 14));
        auto sm = transfer_spectrum(transfer_matrix_monomial(s, 14));
        std::vector<cplx> a(sc.values.data(), sc.values.data() + sc.values.size());
        std::vector<cplx> b(sm.values.data(), sm.values.data() + sm.values.size());
        auto bymod = [](cplx u, cplx v) { return std::abs(u) > std::abs(v); };
        std::sort(a.begin(), a.end(), bymod);
        std::sort(b.begin(), b.end(), bymod);
        return std::pair(a, b);
    };
    auto [a1, b1] = spectra(cplx(1.0, 0.0));
    EXPECT_LT(std::abs(a1[0] - b1[0]), 1e-11);
    EXPECT_LT(std::abs(a1[1] - b1[1]), 1e-11);
    auto [a2, b2] = spectra(cplx(0.5, 9.5));
    EXPECT_LT(std::abs(a2[0] - b2[0]), 1e-4);
    EXPECT_LT(std::abs(a2[1] - b2[1]), 1e-4);
}

TEST(GoldenMin, FindsQuadraticMinimum) {
    auto f = [](double t) { return (t - 0.7) * (t - 0.7) + 3.0; };
    double t = golden_min(f, -1.0, 2.0);
    EXPECT_NEAR(t, 0.7, 1e-6);
}

TEST(EigenGap, SmallNearSpectralPointLargeAway) {
    double on = eigen_gap_at(9.53369526, -1, 40);
    double off = eigen_gap_at(9.2, -1, 40);
    EXPECT_LT(on, 1e-7);
    EXPECT_GT(off, 1e-3);
}
