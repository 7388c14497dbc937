#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "vacfield/cavity.hpp"
#include "vacfield/config.hpp"
#include "vacfield/errors.hpp"

using namespace vacfield;
using namespace vacfield::cavity;

namespace {

constexpr double pi = std::numbers::pi;

CavityDimensionless default_mirror(int n_modes) {
    auto d = derive_dimensionless(CavityConfig{});
    d.n_modes = n_modes;
    return d;
}

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(lo + (hi - lo) * i / (n - 1));
    return xs;
}

} // namespace

TEST(Coupling, UnitCase) {
    const auto c = coupling(1, 1, {0.0, 8.0, 3});
    EXPECT_DOUBLE_EQ(c.c_hat, 1.0);
    EXPECT_DOUBLE_EQ(c.d_hat, 0.5);
    EXPECT_LT(coupling(1, 2, {0.0, 8.0, 3}).c_hat, 0.0);
    EXPECT_GT(coupling(2, 3, {0.0, 8.0, 3}).c_hat * coupling(3, 2, {0.0, 8.0, 3}).c_hat, 0.0);
    EXPECT_THROW(coupling(0, 1, {0.0, 8.0, 3}), DomainError);
    EXPECT_THROW(coupling(1, 4, {0.0, 8.0, 3}), DomainError);
}

TEST(Coupling, ExcitationEqualsTwiceSquaredAmplitudes) {
    const CavityDimensionless settings[] = {{0.0, 1e-3, 20}, {1.0617e-9, 2e-4, 13}, {3.5, 0.02, 7}};
    for (const auto& p : settings) {
        double sum = 0.0;
        for (int k = 1; k <= p.n_modes; ++k)
            for (int j = 1; j <= p.n_modes; ++j) {
                const auto c = coupling(k, j, p);
                EXPECT_EQ(c.d_hat, c.c_hat / (p.omega_hat + k + j));
                sum += c.d_hat * c.d_hat;
            }
        EXPECT_NEAR(wall_excitation(p).n_b / (2.0 * sum), 1.0, 1e-12);
    }
}

TEST(WallExcitation, SingleModeAndSiForm) {
    const CavityDimensionless p{0.3, 0.01, 1};
    EXPECT_NEAR(wall_excitation(p).n_b, 0.25 * 0.01 / (2.3 * 2.3), 1e-18);

    CavityConfig cfg;
    cfg.cutoff = ModeCount{30};
    const PhysicalConstants k;
    const auto d = derive_dimensionless(cfg, k);
    const double si = oracle::n_b_si(30, cfg.L0, cfg.M, cfg.omega_osc, k.hbar, k.c);
    EXPECT_NEAR(wall_excitation(d).n_b / si, 1.0, 1e-12);
}

TEST(WallExcitation, WeightsSumToOneExactly) {
    for (double mu : {1e-18, 1e-4, 2e-4, 1e-3})
        for (int n : {1, 10, 100, 500}) {
            const auto s = wall_excitation({1.0617e-9, mu, n});
            EXPECT_EQ(s.p0 + s.p1, 1.0) << mu << " " << n;
            EXPECT_EQ(s.p1, s.n_b);
            EXPECT_GE(s.n_b, 0.0);
        }
    EXPECT_TRUE(make_wall_state(0.05, 1e-4).perturbative());
    EXPECT_FALSE(make_wall_state(0.2, 1e-4).perturbative());
    EXPECT_THROW(make_wall_state(-0.1, 1e-4), DomainError);
}

TEST(PositionPdf, NormalizationAndMoments) {
    for (double nb : {0.0, 0.0975, 0.5}) {
        const double mu = 2e-4;
        const auto s = make_wall_state(nb, mu);
        const double span = 20.0 * std::sqrt(mu);
        const double norm = oracle::gauss_legendre([&](double q) { return position_pdf(q, s); }, -span, span, 64);
        const double m2 =
            oracle::gauss_legendre([&](double q) { return q * q * position_pdf(q, s); }, -span, span, 64);
        EXPECT_NEAR(norm, 1.0, 1e-10);
        EXPECT_NEAR(m2 / ((1 - nb) * mu / 2 + nb * 3 * mu / 2), 1.0, 1e-10);
    }
    EXPECT_DOUBLE_EQ(position_pdf(0.0, make_wall_state(0.0, 2e-4)), 1.0 / std::sqrt(pi * 2e-4));
    EXPECT_THROW(position_pdf(0.0, make_wall_state(0.0, 0.0)), DomainError);
}

TEST(InnerSumTable, SingleEntry) {
    const InnerSumTable t({0.0, 1.0, 1});
    EXPECT_EQ(t(1, 1), 0.25);
    EXPECT_EQ(t.n_modes(), 1);
}

TEST(InnerSumTable, StructureAndBruteForce) {
    const CavityDimensionless p{0.7, 1e-4, 30};
    const InnerSumTable t(p);
    const InnerSumTable shifted({1.7, 1e-4, 30});
    for (int k = 1; k <= 30; ++k)
        for (int q = 1; q <= 30; ++q) {
            EXPECT_EQ(t(k, q), t(q, k));
            EXPECT_GT(t(k, q), 0.0);
            EXPECT_LT(shifted(k, q), t(k, q));
            if (k > 1)
                EXPECT_GT(t(k, q), t(k - 1, q));
            long double brute = 0.0L;
            for (int j = 1; j <= 30; ++j)
                brute += static_cast<long double>(k) * j * q / ((0.7L + k + j) * (0.7L + q + j));
            EXPECT_NEAR(t(k, q) / static_cast<double>(brute), 1.0, 1e-14);
        }
}

TEST(InnerSumTable, ThreadCountDoesNotChangeEntries) {
    const CavityDimensionless p{1e-9, 1e-4, 97};
    const InnerSumTable a(p, 1);
    const InnerSumTable b(p, 4);
    for (int k = 1; k <= 97; ++k)
        for (int q = 1; q <= 97; ++q)
            ASSERT_EQ(a(k, q), b(k, q));
}

TEST(InnerSumTable, MemoryBudget) {
    EXPECT_THROW(InnerSumTable({0.0, 1e-4, InnerSumTable::kMaxModes + 1}), ResourceError);
    EXPECT_THROW(InnerSumTable({0.0, 1e-4, 0}), DomainError);
}

TEST(DeltaDensity, SingleModeClosedForm) {
    const CavityDimensionless p{0.4, 1e-4, 1};
    const InnerSumTable t(p);
    for (double x : {0.0, 0.3, 1.0}) {
        EXPECT_NEAR(delta_density(x, t), 1.0 / (2.4 * 2.4), 1e-16);
        EXPECT_NEAR(delta_density_fast(x, p), 1.0 / (2.4 * 2.4), 1e-16);
    }
}

TEST(DeltaDensity, MatchesTripleSum) {
    const CavityDimensionless p{0.2, 1e-4, 12};
    const InnerSumTable t(p);
    for (double x : {0.0, 0.25, 0.5, 0.8, 0.95, 1.0})
        EXPECT_NEAR(delta_density(x, t) / oracle::cavity_density(x, 0.2, 12), 1.0, 1e-12) << x;
}

TEST(DeltaDensity, FastPathAgrees) {
    const CavityDimensionless p = default_mirror(40);
    const InnerSumTable t(p);
    double worst = 0.0;
    double smax = 0.0;
    std::vector<double> s;
    for (double x : grid(0.0, 1.0, 101)) {
        const double a = delta_density(x, t);
        const double b = delta_density_fast(x, p);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
        smax = std::max(smax, b);
        s.push_back(a);
    }
    EXPECT_LE(worst, 1e-12);
    for (double v : s)
        EXPECT_GE(v, -1e-12 * smax);
    EXPECT_EQ(delta_density(0.0, t) > 0.0, true);
}

TEST(DeltaDensity, DefaultMirrorFrozen) {
    const InnerSumTable t106(default_mirror(106));
    const InnerSumTable t84(default_mirror(84));
    EXPECT_NEAR(delta_density(1.0, t106) / 1.1417605856128626e+07, 1.0, 1e-10);
    const double s84 = delta_density(1.0, t84);
    EXPECT_GT(delta_density(1.0, t106), s84);
    EXPECT_NEAR(s84 / 4.52e6, 1.0, 1e-2);
}

TEST(DeltaDensity, RangeChecks) {
    const CavityDimensionless p{0.0, 1e-4, 3};
    const InnerSumTable t(p);
    EXPECT_THROW(delta_density(-1e-9, t), DomainError);
    EXPECT_THROW(delta_density(1.0 + 1e-12, t), DomainError);
    EXPECT_THROW(delta_density_fast(1.5, p), DomainError);
}

TEST(AveragedCosine, TrivialCases) {
    EXPECT_EQ(averaged_cosine(0, 4, 4, 0.7, 2e-4), 1.0);
    EXPECT_EQ(averaged_cosine(1, 4, 4, 0.7, 2e-4), 1.0);
    for (int d = 1; d < 9; ++d)
        EXPECT_NEAR(averaged_cosine(0, d + 2, 2, 0.37, 0.0), std::cos(pi * d * 0.37), 1e-15);
    EXPECT_THROW(averaged_cosine(2, 1, 1, 0.5, 1e-4), DomainError);
    EXPECT_THROW(averaged_cosine(0, 1, 1, 0.5, -1e-4), DomainError);
}

TEST(AveragedCosine, MatchesPdfQuadrature) {
    const double mu = 2e-4;
    EXPECT_NEAR(averaged_cosine(0, 3, 1, 0.9, mu) / oracle::averaged_cosine(0, 3, 1, 0.9, mu), 1.0, 1e-4);
    for (int n : {0, 1})
        for (int d = 1; d <= 10; ++d)
            for (double x : {0.5, 0.9, 1.0}) {
                const double a = averaged_cosine(n, d + 1, 1, x, mu);
                const double b = oracle::averaged_cosine(n, d + 1, 1, x, mu);
                const double env = std::exp(-mu * std::pow(pi * d * x, 2) / 4);
                EXPECT_LE(std::abs(a - b) / std::max(std::abs(b), env), 1e-10) << n << " " << d << " " << x;
            }
}

TEST(AveragedCosine, LinearizationErrorIsSmall) {
    const double mu = 2e-4;
    for (int d = 1; d <= 10; ++d) {
        const double lin = oracle::averaged_cosine(0, d + 1, 1, 1.0, mu);
        const double exact = oracle::averaged_cosine(0, d + 1, 1, 1.0, mu, true);
        EXPECT_LE(std::abs(lin - exact), 3e-3 * d) << d;
    }
}

TEST(AveragedDensity, ZeroSpreadRecoversDelta) {
    const CavityDimensionless p = default_mirror(60);
    const InnerSumTable t(p);
    const auto s = make_wall_state(0.05, 1e-20);
    for (double x : grid(0.0, 1.0, 41)) {
        const double d = delta_density(x, t);
        EXPECT_NEAR(averaged_density(x, t, s) / d, 1.0, 1e-12) << x;
    }
}

TEST(AveragedDensity, SmearingBelowDeltaAtWall) {
    for (int n : {100, 500}) {
        CavityDimensionless p = default_mirror(n);
        p.mu = 2e-4;
        const InnerSumTable t(p);
        const auto s = wall_excitation(p);
        EXPECT_LT(averaged_density(1.0, t, s), delta_density(1.0, t)) << n;
    }
}

TEST(AveragedDensity, PartsCombine) {
    CavityDimensionless p = default_mirror(50);
    p.mu = 2e-4;
    const InnerSumTable t(p);
    const auto s = wall_excitation(p);
    const auto parts = averaged_density_parts(0.9, t, s);
    EXPECT_EQ(parts.averaged, s.p0 * parts.ground + s.p1 * parts.excited);
}

TEST(FreeCasimir, ClosedFormAndLimit) {
    EXPECT_NEAR(free_casimir_density(0.1) / oracle::casimir_closed(0.1), 1.0, 1e-12);
    for (double e : {0.5, 0.3, 0.1, 0.03, 0.01})
        EXPECT_NEAR(free_casimir_density(e) / oracle::casimir_closed(e), 1.0, 1e-9) << e;
    for (int i = 1; i <= 50; ++i)
        EXPECT_LT(free_casimir_density(0.01 * i), 0.0);
    const std::vector<double> eps{0.04, 0.02, 0.01};
    const auto lim = free_casimir_limit(eps);
    EXPECT_NEAR(lim.limit / (-pi / 24.0), 1.0, 1e-6);
    EXPECT_THROW(free_casimir_density(0.0), DomainError);
    EXPECT_THROW(free_casimir_density(0.6), DomainError);
}

TEST(SiPrefactor, AlternateForm) {
    CavityConfig cfg;
    const PhysicalConstants k;
    const auto d = derive_dimensionless(cfg, k);
    const double alt = 0.5 * d.mu * pi * k.hbar * k.c / (cfg.L0 * cfg.L0);
    EXPECT_NEAR(si_density_prefactor(cfg, k) / alt, 1.0, 1e-14);
}
