#include "vacfield_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ios>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vacfield/boundary.hpp"
#include "vacfield/cavity.hpp"
#include "vacfield/config.hpp"
#include "vacfield/constants.hpp"
#include "vacfield/errors.hpp"
#include "vacfield/parallel.hpp"
#include "vacfield/pointsource.hpp"
#include "vacfield_cli/csv.hpp"

namespace vacfield::cli {

namespace {

constexpr double kWarnExcitation = 0.1;

// Flags that map one-to-one onto config keys. Values are kept as text and fed
// through apply_setting so the file and the command line share one parser.
struct Settings {
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    void add(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help) {
        options.emplace_back(key, app.add_option(flag, values[key], help));
    }
};

struct Common {
    std::string config_path;
    std::string out_path;
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.back() = hi;
    return xs;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig load_config(const Common& common, const Settings& settings) {
    RunConfig cfg;
    if (!common.config_path.empty()) {
        try {
            cfg = parse_config(read_file(common.config_path));
        } catch (const ConfigError& e) {
            if (e.line() > 0)
                throw ConfigError(common.config_path + ":" + std::to_string(e.line()) + ": " + e.what(), e.key(),
                                  e.line());
            throw;
        }
    }
    bool saw_cut = false;
    bool saw_modes = false;
    for (const auto& [key, opt] : settings.options) {
        if (opt->count() == 0)
            continue;
        saw_cut |= key == "omega_cut";
        saw_modes |= key == "n_modes";
        apply_setting(cfg, key, settings.values.at(key));
    }
    if (saw_cut && saw_modes)
        throw ConfigError("--omega-cut and --n-modes are mutually exclusive");
    cfg.validate();
    return cfg;
}

void warn_excitation(const cavity::WallState& state, std::ostream& err) {
    if (state.n_b > 1.0)
        err << "warning: n_b = " << format_number(state.n_b)
            << " exceeds 1; the occupation weights are outside [0, 1]\n";
    else if (state.n_b > kWarnExcitation)
        err << "warning: n_b = " << format_number(state.n_b)
            << " exceeds 0.1; first-order perturbation theory is unreliable\n";
}

std::vector<std::string> cavity_comments(const RunConfig& cfg, const CavityDimensionless& dim,
                                         const cavity::WallState& state) {
    return {
        "omega_hat=" + format_number(dim.omega_hat),
        "mu=" + format_number(dim.mu),
        "n_modes=" + std::to_string(dim.n_modes),
        "n_b=" + format_number(state.n_b),
        "si_prefactor_J_per_m=" + format_number(cavity::si_density_prefactor(cfg.cavity, cfg.constants)),
    };
}

OutputTable boundary_table(const RunConfig& cfg) {
    const auto& b = cfg.boundary;
    const auto scale = boundary::si_scale(b.eta, cfg.constants);
    OutputTable t;
    t.comments = {
        "eta_s=" + format_number(b.eta),
        "length_unit_m=" + format_number(scale.length),
        "fluctuation_unit=" + format_number(scale.fluctuation),
    };
    t.columns = {"z_over_ceta", "e2_renorm", "b2_renorm", "e2_ideal"};
    for (double z : linspace(b.z_min, b.z_max, b.samples)) {
        const auto p = boundary::profile_point(z);
        t.rows.push_back({p.z_hat, p.e2_renorm, p.b2_renorm, p.e2_ideal});
    }
    return t;
}

OutputTable source_table(const RunConfig& cfg) {
    const auto& s = cfg.source;
    const int n = s.effective_samples();
    const auto rs = s.log_spacing ? logspace(s.r_min, s.r_max, n) : linspace(s.r_min, s.r_max, n);
    std::vector<pointsource::SourceDensities> d(rs.size());
    parallel_for(rs.size(), cfg.threads, [&](std::size_t i) { d[i] = pointsource::densities(rs[i]); });

    const double unit = s.alpha * cfg.constants.hbar * cfg.constants.c / std::pow(s.gamma_c, 7);
    OutputTable t;
    t.comments = {"gamma_c_m=" + format_number(s.gamma_c), "density_unit_J_per_m3=" + format_number(unit)};
    t.columns = {"r_over_gamma_c", "u_electric", "u_magnetic", "u_total"};
    for (const auto& p : d)
        t.rows.push_back({p.r_hat, p.u_electric, p.u_magnetic, p.u_total});
    return t;
}

std::string source_check(double r_probe, double cutoff) {
    using pointsource::FieldKind;
    pointsource::Options opts;
    opts.cutoff = cutoff;
    const double fe = pointsource::far_coefficient(FieldKind::electric, r_probe);
    const double fm = pointsource::far_coefficient(FieldKind::magnetic, r_probe);
    const double ee = pointsource::self_energy(FieldKind::electric, opts);
    const double em = pointsource::self_energy(FieldKind::magnetic, opts);
    const double et = pointsource::self_energy(FieldKind::total, opts);

    std::string s;
    auto line = [&s](const std::string& key, const std::string& value) { s += key + "=" + value + "\n"; };
    line("r_probe", format_number(r_probe));
    line("far_coefficient_electric", format_number(fe));
    line("far_coefficient_magnetic", format_number(fm));
    line("far_ratio", format_number(fe / fm));
    line("cutoff", format_number(cutoff));
    line("self_energy_electric", format_number(ee));
    line("self_energy_magnetic", format_number(em));
    line("self_energy_total", format_number(et));
    line("cancellation_ratio", format_number(et / ee));
    line("series_electric", pointsource::describe(pointsource::singular_series(FieldKind::electric)));
    line("series_magnetic", pointsource::describe(pointsource::singular_series(FieldKind::magnetic)));
    return s;
}

OutputTable cavity_density_table(const RunConfig& cfg, std::ostream& err) {
    const auto dim = derive_dimensionless(cfg.cavity, cfg.constants);
    const auto state = cavity::wall_excitation(dim);
    warn_excitation(state, err);
    const cavity::InnerSumTable table(dim, cfg.threads);
    const auto xs = linspace(cfg.cavity.x_min, cfg.cavity.x_max, cfg.cavity.samples);
    const auto s = cavity::sample_profile(xs, cfg.threads, [&](double x) { return cavity::delta_density(x, table); });

    OutputTable t;
    t.comments = cavity_comments(cfg, dim, state);
    t.columns = {"x_over_L0", "S"};
    for (std::size_t i = 0; i < xs.size(); ++i)
        t.rows.push_back({xs[i], s[i]});
    return t;
}

OutputTable cavity_averaged_table(const RunConfig& cfg, std::ostream& err) {
    const auto dim = derive_dimensionless(cfg.cavity, cfg.constants);
    const auto state = cavity::wall_excitation(dim);
    warn_excitation(state, err);
    const cavity::InnerSumTable table(dim, cfg.threads);
    const auto xs = linspace(cfg.cavity.x_min, cfg.cavity.x_max, cfg.cavity.samples);
    std::vector<double> plain(xs.size());
    std::vector<cavity::AveragedDensity> avg(xs.size());
    parallel_for(xs.size(), cfg.threads, [&](std::size_t i) {
        plain[i] = cavity::delta_density(xs[i], table);
        avg[i] = cavity::averaged_density_parts(xs[i], table, state);
    });

    OutputTable t;
    t.comments = cavity_comments(cfg, dim, state);
    t.columns = {"x_over_L0", "S", "S_ground", "S_excited", "S_averaged"};
    for (std::size_t i = 0; i < xs.size(); ++i)
        t.rows.push_back({xs[i], plain[i], avg[i].ground, avg[i].excited, avg[i].averaged});
    return t;
}

OutputTable casimir_table(const std::vector<double>& eps) {
    const auto lim = cavity::free_casimir_limit(eps);
    OutputTable t;
    t.comments = {
        "richardson_limit=" + format_number(lim.limit),
        "richardson_residual=" + format_number(lim.residual),
        "exact=" + format_number(-kPi / 24.0),
    };
    t.columns = {"epsilon", "density"};
    for (double e : eps)
        t.rows.push_back({e, cavity::free_casimir_density(e)});
    return t;
}

void emit(const std::string& text, const Common& common, std::ostream& out) {
    if (common.out_path.empty()) {
        out << text;
        out.flush();
        if (!out)
            throw std::ios_base::failure("failed to write output");
        return;
    }
    std::ofstream file(common.out_path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::ios_base::failure("cannot open output file '" + common.out_path + "'");
    file << text;
    file.flush();
    if (!file)
        throw std::ios_base::failure("failed to write output file '" + common.out_path + "'");
}

std::string to_text(const OutputTable& t) {
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
}

const std::vector<std::string> kSubcommands = {"boundary", "point-source", "cavity"};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (!args.empty() && !args.front().starts_with('-')) {
        bool known = false;
        for (const auto& s : kSubcommands)
            known |= args.front() == s;
        if (!known) {
            err << "error: unknown subcommand '" << args.front() << "'\n";
            return kConfigError;
        }
    }

    CLI::App app{"Regularized vacuum energy densities", "vacfield"};
    app.require_subcommand(1);

    Common common;
    Settings settings;
    auto add_common = [&](CLI::App& sub) {
        sub.add_option("--config", common.config_path, "key = value configuration file");
        sub.add_option("--out", common.out_path, "write output here instead of stdout");
        settings.add(sub, "--threads", "threads", "worker threads for spatial sampling");
        settings.add(sub, "--hbar", "hbar", "reduced Planck constant [J s]");
        settings.add(sub, "--c", "c", "speed of light [m/s]");
    };

    auto* boundary_cmd = app.add_subcommand("boundary", "E^2 and B^2 profiles near a perfect conductor");
    add_common(*boundary_cmd);
    settings.add(*boundary_cmd, "--eta", "eta", "time-splitting parameter [s]");
    settings.add(*boundary_cmd, "--z-min", "z_min", "first sample [c eta]");
    settings.add(*boundary_cmd, "--z-max", "z_max", "last sample [c eta]");
    settings.add(*boundary_cmd, "--samples", "z_samples", "number of samples");

    auto* source_cmd = app.add_subcommand("point-source", "energy densities around a polarizable point source");
    add_common(*source_cmd);
    settings.add(*source_cmd, "--alpha", "alpha", "polarizability [m^3]");
    settings.add(*source_cmd, "--gamma-c", "gamma_c", "cutoff length [m]");
    settings.add(*source_cmd, "--r-min", "r_min", "first radius [gamma_c]");
    settings.add(*source_cmd, "--r-max", "r_max", "last radius [gamma_c]");
    settings.add(*source_cmd, "--samples", "r_samples", "number of radii");
    settings.add(*source_cmd, "--log-spacing", "log_spacing", "true for log-spaced radii");
    auto* check_cmd = source_cmd->add_subcommand("check", "far-zone coefficients and self-energy cancellation");
    double r_probe = 1e4;
    double cutoff = 1.0;
    check_cmd->add_option("--r-probe", r_probe, "radius for the far-zone coefficients [gamma_c]");
    check_cmd->add_option("--cutoff", cutoff, "cutoff scale for the self-energies [gamma_c]");

    auto* cavity_cmd = app.add_subcommand("cavity", "1D cavity with a quantum mobile mirror");
    cavity_cmd->require_subcommand(1);
    auto add_cavity = [&](CLI::App& sub) {
        add_common(sub);
        settings.add(sub, "--L0", "L0", "cavity length [m]");
        settings.add(sub, "--mass", "M", "mirror mass [kg]");
        settings.add(sub, "--omega-osc", "omega_osc", "mirror oscillator frequency [1/s]");
        settings.add(sub, "--omega-cut", "omega_cut", "field cutoff frequency [1/s]");
        settings.add(sub, "--n-modes", "n_modes", "mode cutoff N (instead of --omega-cut)");
        settings.add(sub, "--sigma-over-L0", "sigma_over_L0", "override the mirror position spread");
        settings.add(sub, "--x-min", "x_min", "first sample [L0]");
        settings.add(sub, "--x-max", "x_max", "last sample [L0]");
        settings.add(sub, "--samples", "x_samples", "number of samples");
    };
    auto* density_cmd = cavity_cmd->add_subcommand("density", "energy-density change for fixed mirror position");
    add_cavity(*density_cmd);
    auto* averaged_cmd = cavity_cmd->add_subcommand("averaged", "density averaged over the mirror position");
    add_cavity(*averaged_cmd);
    auto* casimir_cmd = cavity_cmd->add_subcommand("casimir", "regulated free-cavity mode sum and its limit");
    casimir_cmd->add_option("--out", common.out_path, "write output here instead of stdout");
    std::vector<double> epsilons{0.04, 0.02, 0.01};
    casimir_cmd->add_option("--epsilon", epsilons, "regulator values, strictly decreasing")->expected(3, 64);

    // a key registered on several subcommands shares one storage slot; only
    // the options of the selected subcommand can have count() > 0
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        std::string text;
        if (*casimir_cmd) {
            text = to_text(casimir_table(epsilons));
        } else {
            const RunConfig cfg = load_config(common, settings);
            if (*boundary_cmd)
                text = to_text(boundary_table(cfg));
            else if (*check_cmd)
                text = source_check(r_probe, cutoff);
            else if (*source_cmd)
                text = to_text(source_table(cfg));
            else if (*density_cmd)
                text = to_text(cavity_density_table(cfg, err));
            else
                text = to_text(cavity_averaged_table(cfg, err));
        }
        emit(text, common, out);
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << " (best estimate " << format_number(e.best_estimate())
            << ", error " << format_number(e.error_estimate()) << ")\n";
        return kNumericalFailure;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

} // namespace vacfield::cli
