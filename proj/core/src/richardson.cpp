#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "vacfield/errors.hpp"
#include "vacfield/quadrature.hpp"

namespace vacfield::quad {

namespace {

// Fits v_i = L + sum_m c_m h_i^(p + m*step) exactly through all samples and
// returns L. Columns are scaled by h_max^e to keep the system well conditioned.
double fit_limit(std::span<const std::pair<double, double>> samples, int order, int step) {
    const std::size_t n = samples.size();
    const double h_max = samples.front().first;
    std::vector<double> a(n * n);
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ratio = samples[i].first / h_max;
        a[i * n] = 1.0;
        for (std::size_t m = 1; m < n; ++m)
            a[i * n + m] = std::pow(ratio, order + static_cast<int>(m - 1) * step);
        rhs[i] = samples[i].second;
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col]))
                pivot = r;
        if (a[pivot * n + col] == 0.0)
            throw NumericalFailure("Richardson system is singular", samples.back().second, 0.0);
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a[col * n + k], a[pivot * n + k]);
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / a[col * n + col];
            for (std::size_t k = col; k < n; ++k)
                a[r * n + k] -= factor * a[col * n + k];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t k = i + 1; k < n; ++k)
            s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return x[0];
}

} // namespace

RichardsonResult richardson_limit(std::span<const std::pair<double, double>> samples, int leading_order,
                                  int exponent_step) {
    if (samples.size() < 3)
        throw DomainError("Richardson extrapolation needs at least 3 samples");
    if (leading_order < 1 || exponent_step < 1)
        throw DomainError("Richardson orders must be positive");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].first > 0.0) || !std::isfinite(samples[i].second))
            throw DomainError("Richardson samples need h > 0 and finite values");
        if (i > 0 && !(samples[i].first < samples[i - 1].first))
            throw DomainError("Richardson samples must have strictly decreasing h");
    }

    const double all = fit_limit(samples, leading_order, exponent_step);
    const double fine = fit_limit(samples.subspan(1), leading_order, exponent_step);
    return {all, std::abs(all - fine)};
}

} // namespace vacfield::quad
