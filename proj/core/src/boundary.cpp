#include "vacfield/boundary.hpp"

#include <cmath>
#include <vector>

#include "vacfield/errors.hpp"
#include "vacfield/quadrature.hpp"

namespace vacfield::boundary {

namespace {

void require_outside_conductor(double z_hat) {
    if (!(z_hat >= 0.0))
        throw DomainError("z_hat must be non-negative; z < 0 is inside the conductor");
}

// Bisection to machine resolution on a bracket where g changes sign.
template <class G>
double bisect(G g, double lo, double hi) {
    double g_lo = g(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double g_mid = g(mid);
        if (g_mid == 0.0)
            return mid;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double vacuum_term() { return 12.0 / kPi; }

double e2_renorm(double z_hat) {
    require_outside_conductor(z_hat);
    const double z2 = z_hat * z_hat;
    const double d = 4.0 * z2 + 1.0;
    return (4.0 / kPi) * (12.0 * z2 - 1.0) / (d * d * d);
}

double b2_renorm(double z_hat) { return -e2_renorm(z_hat); }

double e2_total(double z_hat) { return vacuum_term() + e2_renorm(z_hat); }
double b2_total(double z_hat) { return vacuum_term() + b2_renorm(z_hat); }

double ideal_limit_e2(double z_hat) {
    if (!(z_hat > 0.0))
        throw DomainError("the ideal-conductor law is undefined at z_hat <= 0");
    const double z2 = z_hat * z_hat;
    return 3.0 / (4.0 * kPi * z2 * z2);
}

double ideal_limit_b2(double z_hat) { return -ideal_limit_e2(z_hat); }

double e2_renorm_slope(double z_hat) {
    require_outside_conductor(z_hat);
    const double z2 = z_hat * z_hat;
    const double d = 4.0 * z2 + 1.0;
    const double d2 = d * d;
    return (4.0 / kPi) * 48.0 * z_hat * (1.0 - 4.0 * z2) / (d2 * d2);
}

ProfilePoint profile_point(double z_hat) {
    const double e2 = e2_renorm(z_hat);
    ProfilePoint p{z_hat, e2, -e2, std::nullopt};
    if (z_hat > 0.0)
        p.e2_ideal = ideal_limit_e2(z_hat);
    return p;
}

Extrema extrema() { return {{0.0, -4.0 / kPi}, {0.5, 1.0 / kPi}}; }

Extrema find_extrema(double z_hi) {
    if (!(z_hi > 0.0))
        throw DomainError("search interval must have positive length");

    std::vector<double> candidates{0.0, z_hi};
    constexpr int kGrid = 1000;
    double prev_z = 0.0;
    // the slope vanishes at z = 0 itself; start the scan just inside
    double prev_s = e2_renorm_slope(z_hi / (4.0 * kGrid));
    for (int i = 1; i <= kGrid; ++i) {
        const double z = z_hi * i / kGrid;
        const double s = e2_renorm_slope(z);
        if (s == 0.0)
            candidates.push_back(z);
        else if ((s < 0.0) != (prev_s < 0.0) && prev_s != 0.0)
            candidates.push_back(bisect(e2_renorm_slope, prev_z > 0.0 ? prev_z : z_hi / (4.0 * kGrid), z));
        prev_z = z;
        prev_s = s;
    }

    Extrema out{{0.0, e2_renorm(0.0)}, {0.0, e2_renorm(0.0)}};
    for (double z : candidates) {
        const double v = e2_renorm(z);
        if (v < out.minimum.value)
            out.minimum = {z, v};
        if (v > out.maximum.value)
            out.maximum = {z, v};
    }
    return out;
}

double half_width() {
    const auto peak = extrema().maximum;
    auto excess = [half = 0.5 * peak.value](double z) { return e2_renorm(z) - half; };
    const double inner = bisect(excess, 0.0, peak.z_hat);
    double outer_hi = 2.0 * peak.z_hat;
    while (excess(outer_hi) > 0.0)
        outer_hi *= 2.0;
    const double outer = bisect(excess, peak.z_hat, outer_hi);
    return outer - inner;
}

double sign_change_position() { return 1.0 / (2.0 * std::sqrt(3.0)); }

IntegralReport integral_report(double rel_tol) {
    const double z0 = sign_change_position();
    IntegralReport r{};
    r.signed_integral = quad::integrate(e2_renorm, quad::SemiInfinite{0.0, 1.0}, rel_tol).value;
    r.negative_part = quad::integrate(e2_renorm, quad::Finite{0.0, z0}, rel_tol).value;
    r.positive_part = quad::integrate(e2_renorm, quad::SemiInfinite{z0, 1.0}, rel_tol).value;
    r.abs_integral = r.positive_part - r.negative_part;
    return r;
}

double integral_check(double rel_tol) { return integral_report(rel_tol).signed_integral; }

SiScale si_scale(double eta, const PhysicalConstants& constants) {
    if (!(eta > 0.0))
        throw DomainError("eta must be positive");
    const double length = constants.c * eta;
    const double c3 = constants.c * constants.c * constants.c;
    return {length, constants.hbar / (c3 * eta * eta * eta * eta)};
}

} // namespace vacfield::boundary
