#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "vacfield/constants.hpp"

namespace vacfield {

// All solvers work in hbar = c = 1 with a module-specific length unit
// (c*eta near the wall, gamma_c around the point source, L0 in the cavity).
// The structs below hold SI inputs; conversion happens at the I/O edge.

struct BoundaryConfig {
    double eta = 5e-17;  // time-splitting parameter [s]; 1/eta = 2e16 s^-1
    double z_min = 0.0;  // [c*eta]
    double z_max = 4.0;  // [c*eta]
    int samples = 401;

    void validate() const;
    friend bool operator==(const BoundaryConfig&, const BoundaryConfig&) = default;
};

struct SourceConfig {
    double alpha = 1.0;     // polarizability, only scales SI output
    double gamma_c = 1e-8;  // cutoff length c/omega_cutoff [m]
    double r_min = 1e-2;    // [gamma_c]
    double r_max = 1e4;     // [gamma_c]
    std::optional<int> samples;  // unset: 64 per decade (log) or 401 (linear)
    bool log_spacing = true;

    void validate() const;
    int effective_samples() const;
    friend bool operator==(const SourceConfig&, const SourceConfig&) = default;
};

struct CutoffFrequency {
    double omega_cut;  // [1/s]
    friend bool operator==(const CutoffFrequency&, const CutoffFrequency&) = default;
};

struct ModeCount {
    int n_modes;
    friend bool operator==(const ModeCount&, const ModeCount&) = default;
};

using CavityCutoff = std::variant<CutoffFrequency, ModeCount>;

struct CavityConfig {
    double L0 = 1e-5;          // equilibrium cavity length [m]
    double M = 1e-11;          // mirror mass [kg]
    double omega_osc = 1e5;    // mirror oscillator frequency [1/s]
    CavityCutoff cutoff = CutoffFrequency{1e16};
    std::optional<double> sigma_over_L0;  // overrides the mirror position spread
    double x_min = 0.0;  // [L0]
    double x_max = 1.0;  // [L0]
    int samples = 401;

    void validate() const;
    friend bool operator==(const CavityConfig&, const CavityConfig&) = default;
};

/// The dimensionless trio that fully determines every cavity sum.
struct CavityDimensionless {
    double omega_hat;  // omega_osc L0 / (pi c)
    double mu;         // hbar / (M omega_osc L0^2); mu/2 is the ground-state variance of q/L0
    int n_modes;

    friend bool operator==(const CavityDimensionless&, const CavityDimensionless&) = default;
};

struct RunConfig {
    PhysicalConstants constants;
    BoundaryConfig boundary;
    SourceConfig source;
    CavityConfig cavity;
    int threads = 1;

    void validate() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a `key = value` document ('#' comments, case-sensitive keys,
/// C-locale numbers). Unspecified keys keep their defaults. Throws ConfigError
/// carrying the line number of the offending key.
RunConfig parse_config(std::string_view text);

/// Applies a single key/value pair on top of an existing configuration.
/// Used by the CLI so flags override config-file values; does not validate
/// cross-field invariants (call RunConfig::validate afterwards).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Serializes every key with shortest round-trip number formatting.
std::string to_config_text(const RunConfig& cfg);

/// Number of cavity modes below omega_cut: floor(omega_cut L0 / (pi c)).
int n_modes_from_cutoff(double omega_cut, double L0, const PhysicalConstants& constants = {});

CavityDimensionless derive_dimensionless(const CavityConfig& cfg, const PhysicalConstants& constants = {});

} // namespace vacfield
