#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tailkit/dists.hpp"

namespace tailkit {

/// Invalid or inconsistent experiment configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
    UniformQQ,
    GeneralQQ,
    ExpQQ,
    ParetoLogQQ,
    Thresholded,
    SlopeConsistency,
    Counterexample,
    LimitsetDemo,
};

ExperimentKind parse_experiment_kind(std::string_view name);
std::string_view to_string(ExperimentKind kind);

/// Rule picking the number k of upper order statistics for a sample of
/// size n: fixed k, k = ceil(n^gamma), or k = ceil((log n)^2).
struct KRule {
    enum class Kind { Fixed, Power, LogSquared };

    Kind kind = Kind::Power;
    std::size_t fixed_k = 0;
    double gamma = 0.6;

    static KRule fixed(std::size_t k);
    static KRule power(double gamma);
    static KRule log_squared();

    /// Accepts "fixed:<k>", "power:<gamma>", "logsq".
    static KRule parse(std::string_view text);
    std::string to_string() const;

    std::size_t k_for(std::size_t n) const;
};

/// How the window height 2M/alpha of K_M is obtained.
enum class WindowAlpha {
    Known,   // the simulation alpha
    PlugIn,  // 1 / Hill estimate from the same sample
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Thresholded;
    DistributionModel model = DistributionModel::pareto(1.0);
    std::vector<std::size_t> n_grid{100, 1000, 10000};
    KRule k_rule = KRule::power(0.6);
    std::size_t replications = 100;
    std::uint64_t master_seed = 42;
    double M = 3.0;
    double delta = 0.25;
    std::filesystem::path output_dir = "tailkit_out";
    unsigned threads = 0;  // 0: hardware concurrency
    bool dump_samples = false;
    bool svg = false;
    bool timing = false;  // runtime_ms column; off keeps CSV output reproducible
    WindowAlpha window_alpha = WindowAlpha::Known;
};

/// Sets one key. Keys match the CLI long option names (experiment, model,
/// alpha, n, k-rule, reps, seed, M, delta, out, threads, dump-samples, svg,
/// timing, window-alpha); underscores are accepted in place of dashes.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Parses key=value lines; '#' starts a comment, blank lines are skipped.
/// Returns the pairs in file order so CLI overrides can be applied after.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

/// Checks every invariant: replications >= 1, 0 < gamma < 1, 2 <= k <= n for
/// every grid point, model/experiment compatibility, positive M and delta.
void validate(const ExperimentConfig& config);

std::vector<std::size_t> parse_size_list(std::string_view text);

}  // namespace tailkit
