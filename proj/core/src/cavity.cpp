#include "vacfield/cavity.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "vacfield/constants.hpp"
#include "vacfield/errors.hpp"
#include "vacfield/parallel.hpp"
#include "vacfield/summation.hpp"

namespace vacfield::cavity {

namespace {

void require_modes(const CavityDimensionless& params) {
    if (params.n_modes < 1)
        throw DomainError("at least one cavity mode is required");
    if (!(params.omega_hat >= 0.0) || !(params.mu >= 0.0))
        throw DomainError("omega_hat and mu must be non-negative");
}

void require_position(double x_hat) {
    if (!(x_hat >= 0.0 && x_hat <= 1.0))
        throw DomainError("x_hat must lie in [0, 1]");
}

double alternating(int n) { return (n & 1) ? -1.0 : 1.0; }

// cos(pi m x) and sin(pi m x) with the angle formed in extended precision;
// m x can reach N, so forming pi m x in double loses ~log2(N) bits.
constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

double cospi(int m, double x) {
    return static_cast<double>(std::cos(kPiLong * static_cast<long double>(m) * static_cast<long double>(x)));
}

double sinpi(int m, double x) {
    return static_cast<double>(std::sin(kPiLong * static_cast<long double>(m) * static_cast<long double>(x)));
}

// Sum of (-1)^(k+p) w[|k-p|] T(k,p) over the full square, k then p ascending.
double signed_table_sum(const InnerSumTable& table, const std::vector<double>& w) {
    const int n = table.n_modes();
    CompensatedSum sum;
    for (int k = 1; k <= n; ++k)
        for (int p = 1; p <= n; ++p) {
            const int d = k > p ? k - p : p - k;
            sum += alternating(d) * w[static_cast<std::size_t>(d)] * table(k, p);
        }
    return sum.value();
}

} // namespace

CouplingValue coupling(int k, int j, const CavityDimensionless& params) {
    require_modes(params);
    if (k < 1 || j < 1 || k > params.n_modes || j > params.n_modes)
        throw DomainError("mode index out of range [1, " + std::to_string(params.n_modes) + "]");
    const double magnitude = std::sqrt(params.mu * static_cast<double>(k) * static_cast<double>(j) / 8.0);
    const double c_hat = alternating(k + j) * magnitude;
    return {k, j, c_hat, c_hat / (params.omega_hat + k + j)};
}

WallState make_wall_state(double n_b, double mu) {
    if (!(n_b >= 0.0) || !std::isfinite(n_b))
        throw DomainError("n_b must be non-negative");
    if (!(mu >= 0.0))
        throw DomainError("mu must be non-negative");
    // Exact for n_b <= 1; above that, step n_b by ulps until the weights sum to one.
    double p0 = 1.0 - n_b;
    for (int i = 0; i < 8 && p0 + n_b != 1.0; ++i) {
        n_b = std::nextafter(n_b, 0.0);
        p0 = 1.0 - n_b;
    }
    return {n_b, p0, n_b, mu};
}

WallState wall_excitation(const CavityDimensionless& params) {
    require_modes(params);
    CompensatedSum sum;
    for (int k = 1; k <= params.n_modes; ++k)
        for (int j = 1; j <= params.n_modes; ++j) {
            const double d = params.omega_hat + k + j;
            sum += static_cast<double>(k) * static_cast<double>(j) / (d * d);
        }
    return make_wall_state(0.25 * params.mu * sum.value(), params.mu);
}

double position_pdf(double q_hat, const WallState& state) {
    const double mu = state.mu;
    if (!(mu > 0.0))
        throw DomainError("position density needs mu > 0");
    const double gauss = std::exp(-q_hat * q_hat / mu);
    const double f0 = gauss / std::sqrt(kPi * mu);
    const double f1 = std::sqrt(4.0 / kPi) / (mu * std::sqrt(mu)) * q_hat * q_hat * gauss;
    return state.p0 * f0 + state.p1 * f1;
}

InnerSumTable::InnerSumTable(const CavityDimensionless& params, int threads)
    : n_(params.n_modes), omega_hat_(params.omega_hat) {
    require_modes(params);
    if (n_ > kMaxModes)
        throw ResourceError("inner-sum table for N = " + std::to_string(n_) + " exceeds the " +
                            std::to_string(kMaxModes) + "-mode memory budget");
    const auto n = static_cast<std::size_t>(n_);

    // a[k][j] = k sqrt(j) / (omega_hat + k + j), so T = a a^T
    std::vector<double> a(n * n);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= n; ++j)
            a[(k - 1) * n + (j - 1)] =
                static_cast<double>(k) * std::sqrt(static_cast<double>(j)) / (omega_hat_ + static_cast<double>(k + j));

    values_.assign(n * n, 0.0);
    parallel_for(n, threads, [&](std::size_t row) {
        const double* ak = &a[row * n];
        for (std::size_t col = row; col < n; ++col) {
            const double* ap = &a[col * n];
            CompensatedSum sum;
            for (std::size_t j = 0; j < n; ++j)
                sum += ak[j] * ap[j];
            values_[row * n + col] = sum.value();
        }
    });
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < row; ++col)
            values_[row * n + col] = values_[col * n + row];
}

double delta_density(double x_hat, const InnerSumTable& table) {
    require_position(x_hat);
    const int n = table.n_modes();
    std::vector<double> cosines(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d)
        cosines[static_cast<std::size_t>(d)] = cospi(d, x_hat);
    return signed_table_sum(table, cosines);
}

double delta_density_fast(double x_hat, const CavityDimensionless& params) {
    require_position(x_hat);
    require_modes(params);
    const int n = params.n_modes;
    std::vector<double> sc(static_cast<std::size_t>(n) + 1);
    std::vector<double> ss(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        sc[static_cast<std::size_t>(k)] = alternating(k) * k * cospi(k, x_hat);
        ss[static_cast<std::size_t>(k)] = alternating(k) * k * sinpi(k, x_hat);
    }

    CompensatedSum total;
    for (int j = 1; j <= n; ++j) {
        CompensatedSum c;
        CompensatedSum s;
        for (int k = 1; k <= n; ++k) {
            const double inv = 1.0 / (params.omega_hat + k + j);
            c += sc[static_cast<std::size_t>(k)] * inv;
            s += ss[static_cast<std::size_t>(k)] * inv;
        }
        const double cj = c.value();
        const double sj = s.value();
        total += j * (cj * cj + sj * sj);
    }
    return total.value();
}

double averaged_cosine(int n, int k, int p, double x_hat, double mu) {
    if (n != 0 && n != 1)
        throw DomainError("oscillator level must be 0 or 1");
    if (!(mu >= 0.0))
        throw DomainError("mu must be non-negative");
    const double a = kPi * (k - p) * x_hat;
    const double e = 0.25 * mu * a * a;
    const double base = std::exp(-e) * cospi(k - p, x_hat);
    return n == 0 ? base : base * (1.0 - 2.0 * e);
}

AveragedDensity averaged_density_parts(double x_hat, const InnerSumTable& table, const WallState& state) {
    require_position(x_hat);
    const int n = table.n_modes();
    std::vector<double> ground(static_cast<std::size_t>(n));
    std::vector<double> excited(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        ground[static_cast<std::size_t>(d)] = averaged_cosine(0, d, 0, x_hat, state.mu);
        excited[static_cast<std::size_t>(d)] = averaged_cosine(1, d, 0, x_hat, state.mu);
    }
    AveragedDensity out{};
    out.ground = signed_table_sum(table, ground);
    out.excited = signed_table_sum(table, excited);
    out.averaged = state.p0 * out.ground + state.p1 * out.excited;
    return out;
}

double averaged_density(double x_hat, const InnerSumTable& table, const WallState& state) {
    return averaged_density_parts(x_hat, table, state).averaged;
}

double free_casimir_density(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.5))
        throw DomainError("epsilon must lie in (0, 0.5]");
    // tail beyond j is at most j e^{-j eps} / (1 - e^{-eps}); stop once that is negligible
    const double tail_factor = 1.0 / -std::expm1(-epsilon);
    CompensatedSum sum;
    for (long j = 1;; ++j) {
        const double term = static_cast<double>(j) * std::exp(-static_cast<double>(j) * epsilon);
        sum += term;
        if (term * tail_factor < 1e-20 && static_cast<double>(j) * epsilon > 1.0)
            break;
    }
    sum += -1.0 / (epsilon * epsilon);
    return 0.5 * kPi * sum.value();
}

quad::RichardsonResult free_casimir_limit(std::span<const double> epsilons) {
    std::vector<std::pair<double, double>> samples;
    samples.reserve(epsilons.size());
    for (double eps : epsilons)
        samples.emplace_back(eps, free_casimir_density(eps));
    return quad::richardson_limit(samples, 2, 2);
}

double si_density_prefactor(const CavityConfig& cfg, const PhysicalConstants& constants) {
    const double L3 = cfg.L0 * cfg.L0 * cfg.L0;
    return constants.hbar * constants.hbar / (2.0 * L3 * cfg.M * cfg.omega_osc) * (kPi * constants.c / cfg.L0);
}

} // namespace vacfield::cavity
