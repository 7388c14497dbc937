#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vacfield/config.hpp"
#include "vacfield/quadrature.hpp"

/// 1D massless scalar field between a fixed mirror at x = 0 and a harmonically
/// bound mirror at x = L0 whose position is treated quantum mechanically.
///
/// Units: x_hat = x / L0 in [0, 1]; mode k has wavenumber pi k / L0.
/// Every sum is fixed by (omega_hat, mu, N) from CavityDimensionless, and a
/// single cutoff N truncates all mode indices.
///
/// S(x_hat) is the dimensionless energy-density change of the dressed ground
/// state relative to fixed walls. The physical value is
///   Delta H(x) = hbar^2 / (2 L0^3 M omega_osc) * (pi c / L0) * S(x_hat)
///              = (mu / 2) (pi hbar c / L0^2) * S(x_hat)   [J/m].
namespace vacfield::cavity {

struct CouplingValue {
    int k;
    int j;
    double c_hat;  // coupling in units of hbar pi c / L0
    double d_hat;  // ground-state amplitude of |1_k 1_j, 1>, c_hat / (omega_hat + k + j)
};

/// c_hat = (-1)^(k+j) sqrt(mu k j / 8). Throws DomainError unless 1 <= k, j <= N.
CouplingValue coupling(int k, int j, const CavityDimensionless& params);

/// Reduced state of the mirror: (1 - n_b)|0><0| + n_b|1><1|.
struct WallState {
    double n_b;
    double p0;
    double p1;
    double mu;

    /// n_b <= 0.1; outside this the first-order dressed state is not trustworthy.
    bool perturbative() const { return n_b <= 0.1; }
};

/// n_b = (mu / 4) sum_{k,j} k j / (omega_hat + k + j)^2.
WallState wall_excitation(const CavityDimensionless& params);

/// Builds the state directly from an excitation number (p0 = 1 - n_b).
WallState make_wall_state(double n_b, double mu);

/// Mirror position density per unit q_hat = q / L0:
///   (1 - n_b) f0 + n_b f1,  f0 = (pi mu)^-1/2 e^{-q^2/mu},
///   f1 = (4/pi)^1/2 mu^-3/2 q^2 e^{-q^2/mu}.
double position_pdf(double q_hat, const WallState& state);

/// Symmetric N x N table T(k,p) = sum_j k j p / ((omega_hat + k + j)(omega_hat + p + j)).
/// Built once in O(N^3) and shared by every spatial sample.
class InnerSumTable {
public:
    static constexpr int kMaxModes = 5000;

    /// Rows are distributed over `threads` workers; entries do not depend on it.
    /// Throws ResourceError for N > kMaxModes.
    explicit InnerSumTable(const CavityDimensionless& params, int threads = 1);

    int n_modes() const noexcept { return n_; }
    double omega_hat() const noexcept { return omega_hat_; }

    /// 1-based mode indices.
    double operator()(int k, int p) const noexcept {
        return values_[static_cast<std::size_t>(k - 1) * n_ + static_cast<std::size_t>(p - 1)];
    }

private:
    int n_;
    double omega_hat_;
    std::vector<double> values_;
};

/// S(x_hat) = sum_{k,p} (-1)^(k+p) cos(pi (k - p) x_hat) T(k,p). O(N^2) per point.
double delta_density(double x_hat, const InnerSumTable& table);

/// Same quantity via cos(a - b) = cos a cos b + sin a sin b:
///   S = sum_j [C_j^2 + S_j^2],  C_j = sum_k (-1)^k cos(pi k x) k sqrt(j) / (omega_hat + k + j).
/// Needs no table; a sum of squares, hence never negative.
double delta_density_fast(double x_hat, const CavityDimensionless& params);

/// Position-averaged cos(pi (k - p) x_hat) over the n-th oscillator state
/// (n = 0 or 1), with A = pi (k - p) x_hat and E = mu A^2 / 4:
///   n = 0: e^{-E} cos A;  n = 1: e^{-E} (1 - 2E) cos A.
double averaged_cosine(int n, int k, int p, double x_hat, double mu);

struct AveragedDensity {
    double ground;    // mode sum with the n = 0 average
    double excited;   // mode sum with the n = 1 average
    double averaged;  // p0 * ground + p1 * excited
};

AveragedDensity averaged_density_parts(double x_hat, const InnerSumTable& table, const WallState& state);

double averaged_density(double x_hat, const InnerSumTable& table, const WallState& state);

/// Renormalized 1D mode-sum density with exponential regulator, in units of
/// hbar c / L0^2: (pi / 2) [sum_j j e^{-j eps} - 1 / eps^2]. Requires eps in (0, 0.5].
double free_casimir_density(double epsilon);

/// Richardson limit of free_casimir_density over the given decreasing epsilons
/// (the regulated sum has an expansion in even powers of eps); tends to -pi/24.
quad::RichardsonResult free_casimir_limit(std::span<const double> epsilons);

/// Samples `f` on every x in `xs` using up to `threads` workers. Output is
/// identical for any thread count.
template <class F>
std::vector<double> sample_profile(std::span<const double> xs, int threads, F&& f);

/// Multiplies S(x_hat) into J/m.
double si_density_prefactor(const CavityConfig& cfg, const PhysicalConstants& constants = {});

} // namespace vacfield::cavity

#include "vacfield/parallel.hpp"

template <class F>
std::vector<double> vacfield::cavity::sample_profile(std::span<const double> xs, int threads, F&& f) {
    std::vector<double> out(xs.size());
    parallel_for(xs.size(), threads, [&](std::size_t i) { out[i] = f(xs[i]); });
    return out;
}
