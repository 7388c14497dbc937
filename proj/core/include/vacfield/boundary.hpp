#pragma once

#include <optional>

#include "vacfield/constants.hpp"

/// Renormalized electric and magnetic vacuum fluctuations in the vacuum half
/// space z > 0 next to a perfect conductor, regularized by time splitting with
/// parameter eta.
///
/// Units: positions are z_hat = z / (c eta); fluctuations are in units of
/// hbar / (c^3 eta^4).
namespace vacfield::boundary {

/// Boundary-independent vacuum contribution, 12/pi. Same for E^2 and B^2.
double vacuum_term();

/// <E^2>_R = (4/pi) (12 z^2 - 1) / (4 z^2 + 1)^3. Finite at z_hat = 0.
/// Throws DomainError for z_hat < 0 (inside the conductor).
double e2_renorm(double z_hat);

/// Exactly -e2_renorm(z_hat).
double b2_renorm(double z_hat);

/// Unrenormalized conductor-side fluctuations: vacuum_term() + renormalized part.
double e2_total(double z_hat);
double b2_total(double z_hat);

/// Ideal-conductor law 3 / (4 pi z^4); undefined at z_hat = 0 (DomainError).
double ideal_limit_e2(double z_hat);
double ideal_limit_b2(double z_hat);

/// d e2_renorm / d z_hat = (4/pi) 48 z (1 - 4 z^2) / (4 z^2 + 1)^4.
double e2_renorm_slope(double z_hat);

struct ProfilePoint {
    double z_hat;
    double e2_renorm;
    double b2_renorm;
    std::optional<double> e2_ideal;  // empty at z_hat = 0
};

ProfilePoint profile_point(double z_hat);

struct Extremum {
    double z_hat;
    double value;
};

struct Extrema {
    Extremum minimum;
    Extremum maximum;
};

/// Closed form: minimum (0, -4/pi), maximum (1/2, 1/pi).
Extrema extrema();

/// Locates the extrema on [0, z_hi] by scanning the slope for sign changes and
/// bisecting each bracket; endpoints are included as candidates.
Extrema find_extrema(double z_hi = 10.0);

/// Width of the region where e2_renorm exceeds half its maximum.
double half_width();

struct IntegralReport {
    double signed_integral;  // int_0^inf e2_renorm
    double abs_integral;     // int_0^inf |e2_renorm|
    double positive_part;    // int over z_hat > 1/(2 sqrt 3)
    double negative_part;    // int over [0, 1/(2 sqrt 3)]
};

/// Quadrature of the renormalized profile over the half space; the integral
/// vanishes for any finite eta.
double integral_check(double rel_tol = 1e-10);
IntegralReport integral_report(double rel_tol = 1e-10);

/// Zero of the profile, 1/(2 sqrt 3).
double sign_change_position();

struct SiScale {
    double length;       // c eta [m]
    double fluctuation;  // hbar / (c^3 eta^4)
};

SiScale si_scale(double eta, const PhysicalConstants& constants = {});

} // namespace vacfield::boundary
