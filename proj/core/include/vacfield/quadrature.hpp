#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <variant>

namespace vacfield::quad {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// [a, b]
struct Finite {
    double a;
    double b;
};

/// [a, inf). `decay_scale` is the length over which the integrand changes
/// appreciably; the domain is split at a + decay_scale and the tail is mapped
/// onto a finite interval with t = a' + scale * s / (1 - s).
struct SemiInfinite {
    double a;
    double decay_scale = 1.0;
};

using Domain = std::variant<Finite, SemiInfinite>;

struct Options {
    double rel_tol = 1e-10;
    std::size_t max_evaluations = 2'000'000;
    /// Equal-width panels the domain (or the finite head of a semi-infinite
    /// domain) is cut into before adaptive refinement. Use for oscillatory
    /// integrands with a known period.
    int initial_panels = 1;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive tanh-sinh quadrature. The result is accepted when the
/// summed panel error estimate drops below
///   max(rel_tol * |I|, 100 eps * integral of |f|),
/// the second term being the roundoff floor for integrals that cancel.
/// Throws NumericalFailure (carrying the best estimate) when the evaluation
/// budget runs out, and DomainError for an invalid domain or tolerance.
/// Abscissae closer to an endpoint than the local double spacing are clamped
/// one ulp inside, so a singularity at a nonzero endpoint limits accuracy to
/// roughly its integral over that last ulp.
QuadResult integrate(const Integrand& f, const Domain& domain, const Options& options = {});

inline QuadResult integrate(const Integrand& f, const Domain& domain, double rel_tol) {
    Options o;
    o.rel_tol = rel_tol;
    return integrate(f, domain, o);
}

/// Limit extrapolation for v(h) = L + c0 h^p + c1 h^(p+s) + ... with p the
/// leading order and s the exponent step. All samples are fitted exactly;
/// `residual` is the change in L when the coarsest sample is dropped.
struct RichardsonResult {
    double limit = 0.0;
    double residual = 0.0;
};

RichardsonResult richardson_limit(std::span<const std::pair<double, double>> samples, int leading_order,
                                  int exponent_step = 1);

} // namespace vacfield::quad
