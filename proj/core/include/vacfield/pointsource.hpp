#pragma once

#include <array>
#include <string>

/// Vacuum energy densities around a point-like polarizable source in its
/// dressed ground state, with an exponential ultraviolet cutoff.
///
/// Units: r_hat = r / gamma_c; densities u = <field^2>/(8 pi) in units of
/// alpha hbar c / gamma_c^7; space-integrated energies in alpha hbar c / gamma_c^4.
///
/// The cutoff e^{-(k+k') gamma_c} enters exactly as the lower limit of the
/// gamma integral in the factorized representation, so every profile is a
/// smooth one-dimensional integral that is finite at r = 0.
namespace vacfield::pointsource {

enum class FieldKind { electric, magnetic, total };

struct Options {
    double cutoff = 1.0;     // lower gamma limit in units of gamma_c
    double rel_tol = 1e-12;  // quadrature tolerance for the gamma integral
};

/// (4/pi^3) int_cutoff^inf (3r^4 - 2r^2 g^2 + 3g^4)/(r^2+g^2)^6 dg
double u_electric(double r_hat, const Options& options = {});

/// -(4/pi^3) int_cutoff^inf 8 r^2 g^2/(r^2+g^2)^6 dg; zero at the source.
double u_magnetic(double r_hat, const Options& options = {});

struct SourceDensities {
    double r_hat;
    double u_electric;
    double u_magnetic;
    double u_total;
};

SourceDensities densities(double r_hat, const Options& options = {});

/// u(r_probe) * 16 pi^2 * r_probe^7, which tends to 23 (electric) or -7
/// (magnetic) with an O(1/r_probe) bias. Requires r_probe >= 100.
double far_coefficient(FieldKind kind, double r_probe);

/// int_0^inf 4 pi r^2 u(r) dr at the given cutoff. The electric and magnetic
/// parts are individually finite and cancel in the total.
double self_energy(FieldKind kind, const Options& options = {}, double rel_tol = 1e-10);

struct Rational {
    long numerator;
    long denominator;
    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// One term c * delta^(order)(r) / r^power of the distributional density.
/// delta_order = -1 marks the regular r^-power term.
struct SingularTerm {
    int delta_order;
    int inverse_power;
    Rational coefficient;
    friend bool operator==(const SingularTerm&, const SingularTerm&) = default;
};

/// Cutoff-removed density as a distribution: prefactor_sign * hbar c alpha / (4 pi)^2
/// times the sum of the six terms. Symbolic data; never evaluated pointwise.
struct SingularSeries {
    FieldKind kind;
    int prefactor_sign;
    std::array<SingularTerm, 6> terms;
};

SingularSeries singular_series(FieldKind kind);

std::string describe(const SingularSeries& series);

/// Electric density from the double wavenumber integral over spherical Bessel
/// products, damped by e^{-(k+k')}, evaluated as iterated quadrature (inner k'
/// first). Independent of the gamma representation; r_hat must be positive.
double bessel_oracle_electric(double r_hat, double rel_tol = 1e-8);

} // namespace vacfield::pointsource
