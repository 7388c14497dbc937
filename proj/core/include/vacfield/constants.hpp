#pragma once

namespace vacfield {

// CODATA 2018 exact values.
inline constexpr double kHbar = 1.054571817e-34; // J s
inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct PhysicalConstants {
    double hbar = kHbar;
    double c = kSpeedOfLight;

    void validate() const;

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

} // namespace vacfield
