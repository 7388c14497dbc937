#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vacfield/errors.hpp"
#include "vacfield/pointsource.hpp"

using namespace vacfield;
using namespace vacfield::pointsource;

namespace {

constexpr double pi = std::numbers::pi;
const double pi3 = pi * pi * pi;

// gamma in [1, inf) mapped to s = 1/gamma in (0, 1]
double electric_gl(double r) {
    auto f = [r](double s) {
        const double g = 1.0 / s;
        const double d = r * r + g * g;
        return (3 * std::pow(r, 4) - 2 * r * r * g * g + 3 * std::pow(g, 4)) / std::pow(d, 6) / (s * s);
    };
    return 4.0 / pi3 * oracle::gauss_legendre(f, 0.0, 1.0, 200);
}

double magnetic_gl(double r) {
    auto f = [r](double s) {
        const double g = 1.0 / s;
        const double d = r * r + g * g;
        return 8 * r * r * g * g / std::pow(d, 6) / (s * s);
    };
    return -4.0 / pi3 * oracle::gauss_legendre(f, 0.0, 1.0, 200);
}

} // namespace

TEST(PointSource, ValueAtSource) {
    EXPECT_NEAR(u_electric(0.0) / (12.0 / (7.0 * pi3)), 1.0, 1e-14);
    EXPECT_NEAR(u_electric(0.0), 0.05530, 2e-5);
    EXPECT_EQ(u_magnetic(0.0), 0.0);
    EXPECT_THROW(u_electric(-1.0), DomainError);
    EXPECT_THROW(u_magnetic(-1e-9), DomainError);
}

TEST(PointSource, MatchesGaussLegendreOracle) {
    for (double r : {0.01, 0.3, 1.0, 2.0, 7.5}) {
        EXPECT_NEAR(u_electric(r) / electric_gl(r), 1.0, 1e-11) << r;
        EXPECT_NEAR(u_magnetic(r) / magnetic_gl(r), 1.0, 1e-11) << r;
    }
}

TEST(PointSource, FrozenValues) {
    EXPECT_NEAR(u_electric(1.0) / 2.4087505637780558e-03, 1.0, 1e-12);
    EXPECT_NEAR(u_magnetic(1.0) / -3.8881394096150113e-03, 1.0, 1e-12);
}

TEST(PointSource, FarZoneLeadingTerms) {
    const double r = 1e4;
    EXPECT_NEAR(u_electric(r) / (23.0 / (16 * pi * pi * std::pow(r, 7))), 1.0, 1e-3);
    EXPECT_NEAR(u_magnetic(r) / (-7.0 / (16 * pi * pi * std::pow(r, 7))), 1.0, 1e-3);
    EXPECT_NEAR(u_electric(r) / u_magnetic(r) / (-23.0 / 7.0), 1.0, 2e-3);
}

TEST(PointSource, FarCoefficients) {
    EXPECT_NEAR(far_coefficient(FieldKind::electric, 1e4), 23.0, 0.03);
    EXPECT_NEAR(far_coefficient(FieldKind::magnetic, 1e4), -7.0, 0.01);
    const double d2 = std::abs(far_coefficient(FieldKind::electric, 1e2) - 23.0);
    const double d3 = std::abs(far_coefficient(FieldKind::electric, 1e3) - 23.0);
    EXPECT_GT(d2 / d3, 5.0);
    EXPECT_LT(d2 / d3, 20.0);
    EXPECT_THROW(far_coefficient(FieldKind::electric, 99.0), DomainError);
    EXPECT_NEAR(far_coefficient(FieldKind::total, 1e4), 16.0, 0.04);
}

TEST(PointSource, SeriesAgreesWithFarCoefficient) {
    const auto s = singular_series(FieldKind::electric);
    EXPECT_NEAR(s.terms[0].coefficient.value(), far_coefficient(FieldKind::electric, 1e4), 0.03);
    const auto m = singular_series(FieldKind::magnetic);
    EXPECT_NEAR(m.prefactor_sign * m.terms[0].coefficient.value(), far_coefficient(FieldKind::magnetic, 1e4), 0.01);
}

TEST(PointSource, SelfEnergies) {
    // (1/4)(16/pi^2) int t^2(3t^4 - 2t^2 + 3)/(1+t^2)^6 dt with the Beta oracle
    const double radial =
        3 * oracle::beta_integral(7, 6) - 2 * oracle::beta_integral(5, 6) + 3 * oracle::beta_integral(3, 6);
    const double expected = 0.25 * 16.0 / (pi * pi) * radial;
    EXPECT_NEAR(expected, 3.0 / (16.0 * pi), 1e-16);
    const double e = self_energy(FieldKind::electric);
    const double m = self_energy(FieldKind::magnetic);
    EXPECT_NEAR(e / expected, 1.0, 1e-10);
    EXPECT_NEAR(m / -expected, 1.0, 1e-10);
    // 3 int t^6 - 10 int t^4 + 3 int t^2 over (1+t^2)^-6 vanishes
    EXPECT_NEAR(3 * oracle::beta_integral(7, 6) - 10 * oracle::beta_integral(5, 6) + 3 * oracle::beta_integral(3, 6),
                0.0, 1e-16);
    EXPECT_LE(std::abs(self_energy(FieldKind::total)), 1e-6 * e);
}

TEST(PointSource, CutoffIsAPureLengthScale) {
    for (double g : {0.5, 2.0, 3.7}) {
        Options o;
        o.cutoff = g;
        for (double r : {0.0, 0.4, 1.0, 6.0, 250.0}) {
            EXPECT_NEAR(u_electric(r, o) / (std::pow(g, -7) * u_electric(r / g)), 1.0, 1e-12) << g << " " << r;
            if (r > 0)
                EXPECT_NEAR(u_magnetic(r, o) / (std::pow(g, -7) * u_magnetic(r / g)), 1.0, 1e-12) << g << " " << r;
        }
        EXPECT_NEAR(self_energy(FieldKind::electric, o) / (3.0 / (16.0 * pi) * std::pow(g, -4)), 1.0, 1e-9);
        EXPECT_LE(std::abs(self_energy(FieldKind::total, o)), 1e-6 * self_energy(FieldKind::electric, o));
    }
    Options bad;
    bad.cutoff = 0.0;
    EXPECT_THROW(u_electric(1.0, bad), DomainError);
}

TEST(PointSource, SignStructure) {
    for (int i = 0; i <= 7 * 16; ++i) {
        const double r = std::pow(10.0, -3.0 + i / 16.0);
        const auto d = densities(r);
        EXPECT_GT(d.u_electric, 0.0) << r;
        EXPECT_LE(d.u_magnetic, 0.0) << r;
        EXPECT_EQ(d.u_total, d.u_electric + d.u_magnetic);
    }
}

TEST(PointSource, FarRatioMonotoneInLastDecade) {
    double prev = 0.0;
    for (int i = 0; i <= 16; ++i) {
        const double r = std::pow(10.0, 3.0 + i / 16.0);
        const double dev = std::abs(u_electric(r) / u_magnetic(r) + 23.0 / 7.0);
        if (i > 0)
            EXPECT_LT(dev, prev) << r;
        prev = dev;
    }
}

TEST(PointSource, SingularSeriesTable) {
    const auto e = singular_series(FieldKind::electric);
    EXPECT_EQ(e.prefactor_sign, 1);
    const std::array<SingularTerm, 6> et{{{-1, 7, {23, 1}},
                                          {0, 6, {-23, 1}},
                                          {1, 5, {10, 1}},
                                          {2, 4, {-7, 3}},
                                          {3, 3, {1, 3}},
                                          {4, 2, {1, 15}}}};
    EXPECT_EQ(e.terms, et);
    const auto m = singular_series(FieldKind::magnetic);
    EXPECT_EQ(m.prefactor_sign, -1);
    const std::array<SingularTerm, 6> mt{{{-1, 7, {7, 1}},
                                          {0, 6, {-7, 1}},
                                          {1, 5, {2, 1}},
                                          {2, 4, {1, 3}},
                                          {3, 3, {-1, 3}},
                                          {4, 2, {-1, 15}}}};
    EXPECT_EQ(m.terms, mt);
    EXPECT_THROW(singular_series(FieldKind::total), DomainError);
    EXPECT_NE(describe(e).find("23 r^-7"), std::string::npos);
    EXPECT_NE(describe(m).find("1/15 r^-2 delta^(4)(r)"), std::string::npos);
}

TEST(PointSource, BesselOracle) {
    EXPECT_NEAR(bessel_oracle_electric(1.0) / u_electric(1.0), 1.0, 1e-4);
    EXPECT_NEAR(bessel_oracle_electric(0.5) / u_electric(0.5), 1.0, 1e-4);
    EXPECT_THROW(bessel_oracle_electric(0.0), DomainError);
}
