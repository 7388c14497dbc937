#include "vacfield/config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <system_error>

#include "vacfield/errors.hpp"

namespace vacfield {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("malformed number for " + std::string(key) + ": '" + std::string(text) + "'",
                          std::string(key));
    if (!std::isfinite(value))
        throw ConfigError(std::string(key) + " must be finite", std::string(key));
    return value;
}

long long parse_integer(std::string_view key, std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("malformed integer for " + std::string(key) + ": '" + std::string(text) + "'",
                          std::string(key));
    return value;
}

int parse_count(std::string_view key, std::string_view text, long long minimum) {
    const long long v = parse_integer(key, text);
    if (v < minimum)
        throw ConfigError(std::string(key) + " must be at least " + std::to_string(minimum), std::string(key));
    if (v > std::numeric_limits<int>::max())
        throw ConfigError(std::string(key) + " is too large", std::string(key));
    return static_cast<int>(v);
}

bool parse_flag(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw ConfigError("malformed boolean for " + std::string(key) + ": '" + std::string(text) + "'",
                      std::string(key));
}

double positive(std::string_view key, std::string_view text) {
    const double v = parse_real(key, text);
    if (!(v > 0.0))
        throw ConfigError(std::string(key) + " must be positive", std::string(key));
    return v;
}

double non_negative(std::string_view key, std::string_view text) {
    const double v = parse_real(key, text);
    if (v < 0.0)
        throw ConfigError(std::string(key) + " must be non-negative", std::string(key));
    return v;
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void require(bool ok, const char* message, const char* key) {
    if (!ok)
        throw ConfigError(message, key);
}

} // namespace

void PhysicalConstants::validate() const {
    require(hbar > 0.0 && std::isfinite(hbar), "hbar must be positive", "hbar");
    require(c > 0.0 && std::isfinite(c), "c must be positive", "c");
}

void BoundaryConfig::validate() const {
    require(eta > 0.0, "eta must be positive", "eta");
    require(z_min >= 0.0, "z_min must be non-negative", "z_min");
    require(z_max > z_min, "z_max must exceed z_min", "z_max");
    require(samples >= 2, "z_samples must be at least 2", "z_samples");
}

void SourceConfig::validate() const {
    require(alpha > 0.0, "alpha must be positive", "alpha");
    require(gamma_c > 0.0, "gamma_c must be positive", "gamma_c");
    require(r_min >= 0.0, "r_min must be non-negative", "r_min");
    require(r_max > r_min, "r_max must exceed r_min", "r_max");
    require(!log_spacing || r_min > 0.0, "log_spacing requires r_min > 0", "r_min");
    require(!samples || *samples >= 2, "r_samples must be at least 2", "r_samples");
}

int SourceConfig::effective_samples() const {
    if (samples)
        return *samples;
    if (!log_spacing)
        return 401;
    const double decades = std::log10(r_max / r_min);
    return static_cast<int>(std::ceil(64.0 * decades)) + 1;
}

void CavityConfig::validate() const {
    require(L0 > 0.0, "L0 must be positive", "L0");
    require(M > 0.0, "M must be positive", "M");
    require(omega_osc > 0.0, "omega_osc must be positive", "omega_osc");
    if (const auto* f = std::get_if<CutoffFrequency>(&cutoff))
        require(f->omega_cut > 0.0, "omega_cut must be positive", "omega_cut");
    else
        require(std::get<ModeCount>(cutoff).n_modes >= 1, "n_modes must be at least 1", "n_modes");
    if (sigma_over_L0)
        require(*sigma_over_L0 > 0.0 && *sigma_over_L0 <= 0.1, "sigma_over_L0 must lie in (0, 0.1]",
                "sigma_over_L0");
    require(x_min >= 0.0, "x_min must be non-negative", "x_min");
    require(x_max <= 1.0, "x_max must not exceed 1", "x_max");
    require(x_max > x_min, "x_max must exceed x_min", "x_max");
    require(samples >= 2, "x_samples must be at least 2", "x_samples");
}

void RunConfig::validate() const {
    constants.validate();
    boundary.validate();
    source.validate();
    cavity.validate();
    require(threads >= 1, "threads must be at least 1", "threads");
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
    auto& b = cfg.boundary;
    auto& s = cfg.source;
    auto& cav = cfg.cavity;

    if (key == "hbar") cfg.constants.hbar = positive(key, value);
    else if (key == "c") cfg.constants.c = positive(key, value);
    else if (key == "threads") cfg.threads = parse_count(key, value, 1);
    else if (key == "eta") b.eta = positive(key, value);
    else if (key == "z_min") b.z_min = non_negative(key, value);
    else if (key == "z_max") b.z_max = positive(key, value);
    else if (key == "z_samples") b.samples = parse_count(key, value, 2);
    else if (key == "alpha") s.alpha = positive(key, value);
    else if (key == "gamma_c") s.gamma_c = positive(key, value);
    else if (key == "r_min") s.r_min = non_negative(key, value);
    else if (key == "r_max") s.r_max = positive(key, value);
    else if (key == "r_samples") s.samples = parse_count(key, value, 2);
    else if (key == "log_spacing") s.log_spacing = parse_flag(key, value);
    else if (key == "L0") cav.L0 = positive(key, value);
    else if (key == "M") cav.M = positive(key, value);
    else if (key == "omega_osc") cav.omega_osc = positive(key, value);
    else if (key == "omega_cut") cav.cutoff = CutoffFrequency{positive(key, value)};
    else if (key == "n_modes") cav.cutoff = ModeCount{parse_count(key, value, 1)};
    else if (key == "sigma_over_L0") {
        const double sigma = positive(key, value);
        if (sigma > 0.1)
            throw ConfigError("sigma_over_L0 must lie in (0, 0.1]", std::string(key));
        cav.sigma_over_L0 = sigma;
    }
    else if (key == "x_min") cav.x_min = non_negative(key, value);
    else if (key == "x_max") cav.x_max = positive(key, value);
    else if (key == "x_samples") cav.samples = parse_count(key, value, 2);
    else
        throw ConfigError("unknown key '" + std::string(key) + "'", std::string(key));
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::map<std::string, int, std::less<>> key_lines;

    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected 'key = value'", {}, line_no);
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("missing key before '='", {}, line_no);

        if (key_lines.contains(key))
            throw ConfigError("duplicate key '" + std::string(key) + "'", std::string(key), line_no);
        if ((key == "omega_cut" && key_lines.contains("n_modes")) ||
            (key == "n_modes" && key_lines.contains("omega_cut")))
            throw ConfigError("omega_cut and n_modes are mutually exclusive", std::string(key), line_no);

        try {
            apply_setting(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(e.what(), e.key(), line_no);
        }
        key_lines.emplace(std::string(key), line_no);
    }

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        const auto it = key_lines.find(e.key());
        throw ConfigError(e.what(), e.key(), it == key_lines.end() ? 0 : it->second);
    }
    return cfg;
}

std::string to_config_text(const RunConfig& cfg) {
    std::string out;
    auto put = [&out](std::string_view key, const std::string& value) {
        out.append(key).append(" = ").append(value).push_back('\n');
    };

    put("hbar", format_real(cfg.constants.hbar));
    put("c", format_real(cfg.constants.c));
    put("threads", std::to_string(cfg.threads));

    const auto& b = cfg.boundary;
    put("eta", format_real(b.eta));
    put("z_min", format_real(b.z_min));
    put("z_max", format_real(b.z_max));
    put("z_samples", std::to_string(b.samples));

    const auto& s = cfg.source;
    put("alpha", format_real(s.alpha));
    put("gamma_c", format_real(s.gamma_c));
    put("r_min", format_real(s.r_min));
    put("r_max", format_real(s.r_max));
    if (s.samples)
        put("r_samples", std::to_string(*s.samples));
    put("log_spacing", s.log_spacing ? "true" : "false");

    const auto& cav = cfg.cavity;
    put("L0", format_real(cav.L0));
    put("M", format_real(cav.M));
    put("omega_osc", format_real(cav.omega_osc));
    if (const auto* f = std::get_if<CutoffFrequency>(&cav.cutoff))
        put("omega_cut", format_real(f->omega_cut));
    else
        put("n_modes", std::to_string(std::get<ModeCount>(cav.cutoff).n_modes));
    if (cav.sigma_over_L0)
        put("sigma_over_L0", format_real(*cav.sigma_over_L0));
    put("x_min", format_real(cav.x_min));
    put("x_max", format_real(cav.x_max));
    put("x_samples", std::to_string(cav.samples));
    return out;
}

int n_modes_from_cutoff(double omega_cut, double L0, const PhysicalConstants& constants) {
    if (!(omega_cut > 0.0) || !(L0 > 0.0))
        throw DomainError("omega_cut and L0 must be positive");
    const double ratio = omega_cut * L0 / (kPi * constants.c);
    // absorb the rounding of an exact multiple of the fundamental (e.g. omega_cut = pi c / L0)
    const double n = std::floor(ratio * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()));
    if (n < 1.0)
        throw DomainError("cutoff frequency lies below the fundamental cavity mode");
    if (n > static_cast<double>(std::numeric_limits<int>::max()))
        throw DomainError("cutoff frequency implies too many cavity modes");
    return static_cast<int>(n);
}

CavityDimensionless derive_dimensionless(const CavityConfig& cfg, const PhysicalConstants& constants) {
    cfg.validate();
    CavityDimensionless d{};
    d.omega_hat = cfg.omega_osc * cfg.L0 / (kPi * constants.c);
    if (cfg.sigma_over_L0)
        d.mu = 2.0 * *cfg.sigma_over_L0 * *cfg.sigma_over_L0;
    else
        d.mu = constants.hbar / (cfg.M * cfg.omega_osc * cfg.L0 * cfg.L0);
    if (const auto* f = std::get_if<CutoffFrequency>(&cfg.cutoff))
        d.n_modes = n_modes_from_cutoff(f->omega_cut, cfg.L0, constants);
    else
        d.n_modes = std::get<ModeCount>(cfg.cutoff).n_modes;
    return d;
}

} // namespace vacfield
