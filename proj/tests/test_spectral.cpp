#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "msym/json_io.hpp"
#include "msym/period_like.hpp"
#include "msym/spectral.hpp"

using namespace msym;

namespace {

EigenDatum& odd_hit() {
    static EigenDatum d = [] {
        auto hits = eigen_search(-1, 9.45, 9.60, 40);
        if (hits.size() != 1) throw std::runtime_error("odd scan did not isolate one hit");
        return hits[0];
    }();
    return d;
}

EigenDatum& even_hit() {
    static EigenDatum d = [] {
        auto hits = eigen_search(+1, 13.70, 13.85, 40);
        if (hits.size() != 1) throw std::runtime_error("even scan did not isolate one hit");
        return hits[0];
    }();
    return d;
}

}  // namespace

TEST(EigenSearch, OddHitMatchesKnownSpectralParameter) {
    auto& d = odd_hit();
    EXPECT_NEAR(d.R, 9.53369526, 2e-4);
    EXPECT_LT(d.residual, 1e-6);
    EXPECT_EQ(d.parity, -1);
    EXPECT_EQ(d.N, 40);
}

TEST(EigenSearch, EvenHitMatchesKnownSpectralParameter) {
    auto& d = even_hit();
    EXPECT_NEAR(d.R, 13.77975133, 2e-4);
    EXPECT_LT(d.residual, 1e-6);
    EXPECT_EQ(d.parity, +1);
}

TEST(EigenSearch, StableUnderBasisGrowth) {
    auto hits50 = eigen_search(-1, 9.45, 9.60, 50);
    ASSERT_EQ(hits50.size(), 1u);
    EXPECT_LT(std::abs(hits50[0].R - odd_hit().R), 1e-3);
}

TEST(EigenSearch, QuietWindowBelowFirstEvenParameterIsEmpty) {
    auto hits = eigen_search(+1, 1.0, 5.0, 30);
    EXPECT_TRUE(hits.empty());
}

TEST(EigenSearch, RejectsBadArguments) {
    EXPECT_THROW(eigen_search(0, 9.0, 10.0, 40), std::domain_error);
    EXPECT_THROW(eigen_search(-1, 9.0, 10.0, 40, 0.2), std::domain_error);
}

TEST(SpectralPeriod, OddReconstructionSatisfiesThreeTermAndParity) {
    auto spf = spectral_period_function(odd_hit());
    // psi(1) = -psi(1) for this symmetry class, so the sup fallback applies.
    EXPECT_EQ(spf.normalization, "sup");
    EXPECT_LT(std::abs(spf.ev->psi(1.0)), 1e-6);
    EXPECT_LT(three_term_residual(spf.plf(), standard_sample_grid()), 1e-5);
    std::vector<cplx> zs = {cplx(0.7, 0.1), cplx(1.4, -0.2), cplx(2.0, 0.5)};
    EXPECT_LT(parity_residual(*spf.ev, zs), 1e-6);
}

TEST(SpectralPeriod, EvenReconstructionSatisfiesThreeTermAndParity) {
    auto spf = spectral_period_function(even_hit());
    EXPECT_LT(three_term_residual(spf.plf(), standard_sample_grid()), 1e-5);
    std::vector<cplx> zs = {cplx(0.7, 0.1), cplx(1.4, -0.2), cplx(2.0, 0.5)};
    EXPECT_LT(parity_residual(*spf.ev, zs), 1e-6);
    // The even eigenfunction also vanishes at 1 (empirically), with
    // psi(1) = 2 psi(2) persisting far below the eigen residual.
    EXPECT_EQ(spf.normalization, "sup");
    cplx p1 = spf.ev->psi(1.0), p2 = spf.ev->psi(2.0);
    EXPECT_LT(std::abs(p1 - 2.0 * p2), 1e-9);
}

TEST(SpectralPeriod, StrictModeThrowsOnCentralZero) {
    EXPECT_THROW(spectral_period_function(odd_hit(), true), NormalizationDegenerate);
}

TEST(SpectralPeriod, ResidualGateRejectsLooseData) {
    EigenDatum d = odd_hit();
    d.residual = 1e-3;
    EXPECT_THROW(spectral_period_function(d), std::domain_error);
}

TEST(EigenCache, RoundTripPreservesDatum) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "msym_cache_rt";
    fs::remove_all(dir);
    auto& d = odd_hit();
    save_eigen_datum(dir.string(), d);
    auto back = load_eigen_datum(dir.string(), d.parity, d.R, d.N);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->parity, d.parity);
    EXPECT_EQ(back->N, d.N);
    EXPECT_DOUBLE_EQ(back->R, d.R);
    EXPECT_DOUBLE_EQ(back->residual, d.residual);
    ASSERT_EQ(back->coeffs.size(), d.coeffs.size());
    for (size_t i = 0; i < d.coeffs.size(); ++i)
        EXPECT_EQ(back->coeffs[i], d.coeffs[i]);
    fs::remove_all(dir);
}

TEST(EigenCache, CorruptOrMissingFilesLoadAsEmpty) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "msym_cache_bad";
    fs::remove_all(dir);
    auto& d = odd_hit();
    EXPECT_FALSE(load_eigen_datum(dir.string(), d.parity, d.R, d.N).has_value());
    fs::create_directories(dir);
    {
        std::ofstream out(dir / eigen_cache_name(d.parity, d.R, d.N));
        out << "{ definitely not json";
    }
    EXPECT_FALSE(load_eigen_datum(dir.string(), d.parity, d.R, d.N).has_value());
    fs::remove_all(dir);
}
