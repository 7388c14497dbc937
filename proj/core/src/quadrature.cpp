#include "vacfield/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "vacfield/constants.hpp"
#include "vacfield/errors.hpp"
#include "vacfield/summation.hpp"

namespace vacfield::quad {

namespace {

constexpr int kMaxLevel = 6;
constexpr int kMinLevel = 3;
// Nodes whose weight falls below this contribute nothing at double precision
// for integrands in the supported class.
constexpr double kWeightCutoff = 1e-20;
constexpr double kRoundoffFactor = 100.0 * std::numeric_limits<double>::epsilon();

struct Node {
    double comp;    // 1 - |x| on the reference interval [-1, 1]
    double weight;  // dx/dt
};

struct NodeTable {
    double center_weight = kPi / 2;
    // levels[0]: t = 1, 2, ...; levels[k]: t = odd multiples of 2^-k.
    std::array<std::vector<Node>, kMaxLevel + 1> levels;
};

Node node_at(double t) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double cu = std::cosh(u);
    return {1.0 / (std::exp(u) * cu), 0.5 * kPi * std::cosh(t) / (cu * cu)};
}

const NodeTable& node_table() {
    static const NodeTable table = [] {
        NodeTable tbl;
        for (int level = 0; level <= kMaxLevel; ++level) {
            const double h = std::ldexp(1.0, -level);
            for (int i = 0;; ++i) {
                const double t = level == 0 ? (i + 1) * h : (2 * i + 1) * h;
                const Node n = node_at(t);
                if (n.weight < kWeightCutoff || n.comp == 0.0)
                    break;
                tbl.levels[level].push_back(n);
            }
        }
        return tbl;
    }();
    return table;
}

enum class PanelKind { plain, tail };

struct Panel {
    double a = 0.0;
    double b = 0.0;
    PanelKind kind = PanelKind::plain;
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

class Evaluator {
public:
    Evaluator(const Integrand& f, double tail_origin, double tail_scale, const Options& options)
        : f_(f), tail_origin_(tail_origin), tail_scale_(tail_scale), options_(options) {}

    void evaluate(Panel& p) {
        const auto& table = node_table();
        const double half = 0.5 * (p.b - p.a);

        auto sample = [&](double left_gap, double right_gap, bool from_left) {
            return p.kind == PanelKind::plain ? plain(p, half, left_gap, right_gap, from_left)
                                              : tail(p, half, left_gap, right_gap, from_left);
        };

        const double fc = sample(half, half, true);
        CompensatedSum sum;
        CompensatedSum abs_sum;
        sum += table.center_weight * fc;
        abs_sum += table.center_weight * std::abs(fc);

        double previous = 0.0;
        for (int level = 0; level <= kMaxLevel; ++level) {
            for (const Node& n : table.levels[level]) {
                const double gap = half * n.comp;
                const double fl = sample(gap, 2.0 * half - gap, true);
                const double fr = sample(2.0 * half - gap, gap, false);
                sum += n.weight * fl;
                sum += n.weight * fr;
                abs_sum += n.weight * (std::abs(fl) + std::abs(fr));
            }
            const double h = std::ldexp(1.0, -level);
            const double estimate = half * h * sum.value();
            const double l1 = half * h * abs_sum.value();
            if (level > 0) {
                const double diff = std::abs(estimate - previous);
                const double target = std::max(0.1 * options_.rel_tol * std::abs(estimate), kRoundoffFactor * l1);
                if ((level >= kMinLevel && diff <= target) || level == kMaxLevel) {
                    p.value = estimate;
                    p.error = diff;
                    p.l1 = l1;
                    return;
                }
            }
            previous = estimate;
        }
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    double checked(double x, double fx) {
        ++evaluations_;
        if (!std::isfinite(fx))
            throw NumericalFailure("integrand is not finite at x = " + std::to_string(x), 0.0,
                                   std::numeric_limits<double>::infinity());
        return fx;
    }

    double plain(const Panel& p, double, double left_gap, double right_gap, bool from_left) {
        double x = from_left ? p.a + left_gap : p.b - right_gap;
        // a gap below the spacing of doubles near an endpoint rounds onto it
        if (x <= p.a)
            x = std::nextafter(p.a, p.b);
        else if (x >= p.b)
            x = std::nextafter(p.b, p.a);
        return checked(x, f_(x));
    }

    double tail(const Panel& p, double, double left_gap, double right_gap, bool from_left) {
        const double s = from_left ? p.a + left_gap : p.b - right_gap;
        const double one_minus_s = from_left ? 1.0 - s : (1.0 - p.b) + right_gap;
        if (one_minus_s <= 0.0)
            return 0.0;
        const double t = tail_origin_ + tail_scale_ * s / one_minus_s;
        if (!std::isfinite(t))
            return 0.0;
        const double ft = f_(t);
        if (ft == 0.0) {
            ++evaluations_;
            return 0.0;
        }
        return checked(t, ft * tail_scale_ / (one_minus_s * one_minus_s));
    }

    const Integrand& f_;
    double tail_origin_;
    double tail_scale_;
    const Options& options_;
    std::size_t evaluations_ = 0;
};

void validate(const Options& options) {
    if (!(options.rel_tol >= 1e-14 && options.rel_tol <= 1e-2))
        throw DomainError("rel_tol must lie in [1e-14, 1e-2]");
    if (options.initial_panels < 1)
        throw DomainError("initial_panels must be at least 1");
    if (options.max_evaluations < 1)
        throw DomainError("max_evaluations must be at least 1");
}

} // namespace

QuadResult integrate(const Integrand& f, const Domain& domain, const Options& options) {
    validate(options);

    std::vector<Panel> panels;
    double tail_origin = 0.0;
    double tail_scale = 1.0;

    auto add_plain = [&panels, &options](double a, double b) {
        const int n = options.initial_panels;
        const double width = (b - a) / n;
        for (int i = 0; i < n; ++i) {
            const double lo = a + i * width;
            const double hi = i + 1 == n ? b : a + (i + 1) * width;
            panels.push_back({lo, hi, PanelKind::plain});
        }
    };

    if (const auto* fin = std::get_if<Finite>(&domain)) {
        if (!std::isfinite(fin->a) || !std::isfinite(fin->b) || !(fin->a < fin->b))
            throw DomainError("finite domain requires a < b");
        add_plain(fin->a, fin->b);
    } else {
        const auto& semi = std::get<SemiInfinite>(domain);
        if (!std::isfinite(semi.a) || !(semi.decay_scale > 0.0) || !std::isfinite(semi.decay_scale))
            throw DomainError("semi-infinite domain requires finite a and a positive decay scale");
        tail_origin = semi.a + semi.decay_scale;
        tail_scale = semi.decay_scale;
        add_plain(semi.a, tail_origin);
        panels.push_back({0.0, 1.0, PanelKind::tail});
    }

    Evaluator eval(f, tail_origin, tail_scale, options);
    for (auto& p : panels)
        eval.evaluate(p);

    for (;;) {
        CompensatedSum total;
        CompensatedSum error;
        CompensatedSum l1;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            error += panels[i].error;
            l1 += panels[i].l1;
            if (panels[i].error > panels[worst].error)
                worst = i;
        }
        const double value = total.value();
        const double err = error.value();
        if (err <= std::max(options.rel_tol * std::abs(value), kRoundoffFactor * l1.value()))
            return {value, err, eval.evaluations()};
        if (eval.evaluations() >= options.max_evaluations)
            throw NumericalFailure("quadrature did not converge within the evaluation budget", value, err);

        Panel left = panels[worst];
        Panel right = panels[worst];
        const double mid = 0.5 * (left.a + left.b);
        if (!(mid > left.a && mid < left.b))
            throw NumericalFailure("quadrature panel collapsed below machine resolution", value, err);
        left.b = mid;
        right.a = mid;
        eval.evaluate(left);
        eval.evaluate(right);
        panels[worst] = left;
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, right);
    }
}

} // namespace vacfield::quad
