#include "tailkit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tailkit/format.hpp"

namespace tailkit {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view key) {
    text = trim(text);
    Int v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("'" + std::string(key) + "': not an integer: '" + std::string(text) + "'");
    }
    return v;
}

double parse_real(std::string_view text, std::string_view key) {
    try {
        return parse_double(trim(text));
    } catch (const std::invalid_argument&) {
        throw ConfigError("'" + std::string(key) + "': not a number: '" + std::string(text) + "'");
    }
}

bool parse_bool(std::string_view text, std::string_view key) {
    text = trim(text);
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw ConfigError("'" + std::string(key) + "': not a boolean: '" + std::string(text) + "'");
}

std::string normalize_key(std::string_view key) {
    std::string out(trim(key));
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

bool is_regularly_varying(const DistributionModel& m) {
    return m.kind == ModelKind::Pareto || m.kind == ModelKind::ParetoLog;
}

}  // namespace

ExperimentKind parse_experiment_kind(std::string_view name) {
    if (name == "uniform_qq") return ExperimentKind::UniformQQ;
    if (name == "general_qq") return ExperimentKind::GeneralQQ;
    if (name == "exp_qq") return ExperimentKind::ExpQQ;
    if (name == "pareto_logqq") return ExperimentKind::ParetoLogQQ;
    if (name == "thresholded") return ExperimentKind::Thresholded;
    if (name == "slope_consistency") return ExperimentKind::SlopeConsistency;
    if (name == "counterexample") return ExperimentKind::Counterexample;
    if (name == "limitset_demo") return ExperimentKind::LimitsetDemo;
    throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::UniformQQ: return "uniform_qq";
        case ExperimentKind::GeneralQQ: return "general_qq";
        case ExperimentKind::ExpQQ: return "exp_qq";
        case ExperimentKind::ParetoLogQQ: return "pareto_logqq";
        case ExperimentKind::Thresholded: return "thresholded";
        case ExperimentKind::SlopeConsistency: return "slope_consistency";
        case ExperimentKind::Counterexample: return "counterexample";
        case ExperimentKind::LimitsetDemo: return "limitset_demo";
    }
    return "unknown";
}

KRule KRule::fixed(std::size_t k) { return {Kind::Fixed, k, 0.0}; }
KRule KRule::power(double gamma) { return {Kind::Power, 0, gamma}; }
KRule KRule::log_squared() { return {Kind::LogSquared, 0, 0.0}; }

KRule KRule::parse(std::string_view text) {
    text = trim(text);
    if (text == "logsq") return log_squared();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("k-rule: expected fixed:<k>, power:<gamma> or logsq, got '" +
                          std::string(text) + "'");
    }
    const auto name = text.substr(0, colon);
    const auto arg = text.substr(colon + 1);
    if (name == "fixed") return fixed(parse_integer<std::size_t>(arg, "k-rule"));
    if (name == "power") return power(parse_real(arg, "k-rule"));
    throw ConfigError("k-rule: unknown rule '" + std::string(name) + "'");
}

std::string KRule::to_string() const {
    switch (kind) {
        case Kind::Fixed: return "fixed:" + std::to_string(fixed_k);
        case Kind::Power: return "power:" + format_double_short(gamma);
        case Kind::LogSquared: return "logsq";
    }
    return "unknown";
}

std::size_t KRule::k_for(std::size_t n) const {
    const double nd = static_cast<double>(n);
    switch (kind) {
        case Kind::Fixed:
            return fixed_k;
        case Kind::Power:
            return static_cast<std::size_t>(std::ceil(std::pow(nd, gamma)));
        case Kind::LogSquared: {
            const double l = std::log(nd);
            return static_cast<std::size_t>(std::ceil(l * l));
        }
    }
    return 0;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> out;
    text = trim(text);
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        // Accept 1e5-style shorthand for grid points.
        if (item.find_first_of("eE.") != std::string_view::npos) {
            const double v = parse_real(item, "n");
            if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
                throw ConfigError("n: not a positive integer: '" + std::string(item) + "'");
            }
            out.push_back(static_cast<std::size_t>(v));
        } else {
            out.push_back(parse_integer<std::size_t>(item, "n"));
        }
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

void apply_setting(ExperimentConfig& config, std::string_view raw_key, std::string_view value) {
    const std::string key = normalize_key(raw_key);
    value = trim(value);
    try {
        if (key == "experiment") {
            config.experiment = parse_experiment_kind(value);
        } else if (key == "model") {
            config.model.kind = parse_model_kind(value);
        } else if (key == "alpha") {
            config.model.alpha = parse_real(value, key);
        } else if (key == "n") {
            config.n_grid = parse_size_list(value);
        } else if (key == "k-rule") {
            config.k_rule = KRule::parse(value);
        } else if (key == "reps") {
            config.replications = parse_integer<std::size_t>(value, key);
        } else if (key == "seed") {
            config.master_seed = parse_integer<std::uint64_t>(value, key);
        } else if (key == "M") {
            config.M = parse_real(value, key);
        } else if (key == "delta") {
            config.delta = parse_real(value, key);
        } else if (key == "out") {
            config.output_dir = std::string(value);
        } else if (key == "threads") {
            config.threads = parse_integer<unsigned>(value, key);
        } else if (key == "dump-samples") {
            config.dump_samples = parse_bool(value, key);
        } else if (key == "svg") {
            config.svg = parse_bool(value, key);
        } else if (key == "timing") {
            config.timing = parse_bool(value, key);
        } else if (key == "window-alpha") {
            if (value == "known") {
                config.window_alpha = WindowAlpha::Known;
            } else if (value == "plugin") {
                config.window_alpha = WindowAlpha::PlugIn;
            } else {
                throw ConfigError("window-alpha: expected 'known' or 'plugin'");
            }
        } else {
            throw ConfigError("unknown configuration key '" + std::string(raw_key) + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        out.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate(const ExperimentConfig& config) {
    try {
        make_model(config.model.kind, config.model.alpha);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (config.replications < 1) throw ConfigError("reps must be at least 1");
    if (config.n_grid.empty()) throw ConfigError("n grid is empty");
    if (!(config.M > 0.0) || !std::isfinite(config.M)) throw ConfigError("M must be positive");
    if (!(config.delta > 0.0) || !std::isfinite(config.delta)) throw ConfigError("delta must be positive");
    if (config.k_rule.kind == KRule::Kind::Power &&
        !(config.k_rule.gamma > 0.0 && config.k_rule.gamma < 1.0)) {
        throw ConfigError("k-rule power: gamma must lie in (0, 1) so that k/n -> 0");
    }

    const auto kind = config.experiment;
    const auto& model = config.model;
    if (kind == ExperimentKind::Counterexample) {
        for (auto n : config.n_grid) {
            if (n < 1 || n > 30) throw ConfigError("counterexample: n must lie in [1, 30]");
        }
        return;
    }
    for (auto n : config.n_grid) {
        const auto k = config.k_rule.k_for(n);
        if (k < 2 || k > n) {
            throw ConfigError("k-rule " + config.k_rule.to_string() + " gives k = " + std::to_string(k) +
                              " for n = " + std::to_string(n) + "; need 2 <= k <= n");
        }
    }
    switch (kind) {
        case ExperimentKind::UniformQQ:
            if (model.kind != ModelKind::Uniform01) throw ConfigError("uniform_qq needs model=uniform");
            break;
        case ExperimentKind::ExpQQ:
            if (model.kind != ModelKind::Exponential) throw ConfigError("exp_qq needs model=exponential");
            break;
        case ExperimentKind::ParetoLogQQ:
            if (model.kind != ModelKind::Pareto) throw ConfigError("pareto_logqq needs model=pareto");
            break;
        case ExperimentKind::Thresholded:
        case ExperimentKind::SlopeConsistency:
            if (!is_regularly_varying(model)) {
                throw ConfigError(std::string(to_string(kind)) + " needs a regularly varying model (pareto, paretolog)");
            }
            break;
        case ExperimentKind::LimitsetDemo:
            if (model.kind != ModelKind::ParetoLog) throw ConfigError("limitset_demo needs model=paretolog");
            break;
        case ExperimentKind::GeneralQQ:
        case ExperimentKind::Counterexample:
            break;
    }
}

}  // namespace tailkit
