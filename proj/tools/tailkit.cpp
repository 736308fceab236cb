// tailkit: QQ-plot convergence and tail-index experiments from the command line.
//
//   tailkit run --experiment thresholded --model pareto --alpha 1
//       --n 1000,10000,100000 --k-rule power:0.6 --reps 100 --seed 42 --out results
//   tailkit counterexample --n 1-20 --out results --svg-n 6
//
// Exit codes: 0 success, 1 config error, 2 I/O error, 3 internal invariant
// violation.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tailkit/config.hpp"
#include "tailkit/counterexample.hpp"
#include "tailkit/format.hpp"
#include "tailkit/limitset.hpp"
#include "tailkit/report.hpp"
#include "tailkit/runner.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

std::string show(const std::optional<double>& v) {
    if (!v) return "-";
    std::ostringstream out;
    out << std::setprecision(6) << *v;
    return out.str();
}

void print_summary(const tailkit::ExperimentConfig& config, const tailkit::RunResult& result) {
    std::cout << "experiment " << tailkit::to_string(config.experiment) << ", model "
              << tailkit::to_string(config.model.kind) << " alpha " << config.model.alpha << ", k-rule "
              << config.k_rule.to_string() << ", seed " << config.master_seed << "\n";
    std::cout << std::left << std::setw(10) << "n" << std::setw(8) << "k" << std::setw(8) << "misses"
              << std::setw(14) << "median_D" << std::setw(14) << "mean_slope" << std::setw(14)
              << "mean_hill" << std::setw(14) << "mean_kM/k" << "\n";
    for (const auto& s : result.summary) {
        std::cout << std::left << std::setw(10) << s.n << std::setw(8) << s.k << std::setw(8)
                  << s.window_misses << std::setw(14) << show(s.hausdorff_median) << std::setw(14)
                  << show(s.ls_slope_mean) << std::setw(14) << show(s.hill_mean) << std::setw(14)
                  << show(s.km_ratio_mean) << "\n";
    }
    std::cout << "median Hausdorff distance "
              << (result.medians_strictly_decreasing ? "strictly decreasing"
                  : result.medians_nonincreasing     ? "nonincreasing"
                                                     : "NOT monotone")
              << " across the n grid\n";
    for (const auto& w : result.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

// "1-20" or "1,5,10".
std::vector<int> parse_n_range(const std::string& text) {
    std::vector<int> out;
    if (const auto dash = text.find('-'); dash != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dash));
        const int hi = std::stoi(text.substr(dash + 1));
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    for (auto v : tailkit::parse_size_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

int run_counterexample_table(const std::string& n_text, const std::string& delta_text,
                             const std::string& out_dir, int svg_n) {
    std::vector<int> ns;
    try {
        ns = parse_n_range(n_text);
    } catch (const std::exception& e) {
        throw tailkit::ConfigError(std::string("--n: ") + e.what());
    }
    const bool cluster_delta = delta_text == "cluster";
    std::optional<double> fixed_delta;
    if (!cluster_delta) {
        try {
            fixed_delta = tailkit::parse_double(delta_text);
        } catch (const std::exception&) {
            throw tailkit::ConfigError("--delta: expected a number or 'cluster'");
        }
        if (!(*fixed_delta > 0.0)) throw tailkit::ConfigError("--delta must be positive");
    }

    std::ostringstream csv;
    csv << "n,k_n,hausdorff,slope,concentration\n";
    for (int n : ns) {
        if (n < 1 || n > tailkit::kMaxMaterializedN) {
            throw tailkit::ConfigError("--n values must lie in [1, 30]");
        }
        const auto inst = tailkit::build_example(n);
        const double delta = fixed_delta ? *fixed_delta : tailkit::example_cluster_delta(n);
        const auto d = tailkit::verify_example(inst, delta);
        csv << n << ',' << inst.k_n << ',' << tailkit::format_double(d.hausdorff_to_limit) << ','
            << tailkit::format_double(d.slope) << ',' << tailkit::format_double(d.concentration) << '\n';
        if (n == svg_n) {
            const auto limit = tailkit::example_limit();
            const auto w = tailkit::Window::make(-1.0, 1.0, -0.25, std::max(0.25, 2.0 / n));
            tailkit::emit_svg(inst.set, tailkit::LimitShape::segment(limit.start, limit.end), w,
                              std::filesystem::path(out_dir) / ("counterexample_n" + std::to_string(n) + "_rep0.svg"),
                              "counterexample n=" + std::to_string(n));
        }
    }
    if (out_dir.empty()) {
        std::cout << csv.str();
    } else {
        tailkit::write_text_file(std::filesystem::path(out_dir) / "counterexample.csv", csv.str());
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QQ-plot random-set convergence and heavy-tail index experiments"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a Monte Carlo experiment and write CSV (and SVG) output");
    std::string config_path;
    run_cmd->add_option("--config", config_path, "key=value configuration file; flags override it");
    std::map<std::string, std::string> values;
    const std::vector<std::pair<std::string, std::string>> value_options = {
        {"experiment", "uniform_qq, general_qq, exp_qq, pareto_logqq, thresholded, slope_consistency, counterexample, limitset_demo"},
        {"model", "uniform, exponential, pareto, paretolog"},
        {"alpha", "rate (exponential) or tail index (pareto families)"},
        {"n", "comma-separated sample sizes, e.g. 100,1000,10000"},
        {"k-rule", "fixed:<k>, power:<gamma> (default power:0.6) or logsq"},
        {"reps", "replications per sample size"},
        {"seed", "64-bit master seed"},
        {"M", "window size (K_M = [0,M] x [0,2M/alpha])"},
        {"delta", "half-width of the concentration square"},
        {"out", "output directory"},
        {"threads", "worker threads (0 = all cores)"},
        {"window-alpha", "known (default) or plugin"},
    };
    for (const auto& [name, help] : value_options) {
        run_cmd->add_option("--" + name, values[name], help);
    }
    bool dump_samples = false, svg = false, timing = false;
    run_cmd->add_flag("--dump-samples", dump_samples, "write each raw sample under <out>/samples");
    run_cmd->add_flag("--svg", svg, "write an SVG QQ plot for replication 0 of every n");
    run_cmd->add_flag("--timing", timing, "fill runtime_ms (makes output run-dependent)");

    // counterexample
    auto* ce_cmd = app.add_subcommand("counterexample", "Tabulate the LS-slope counterexample sets");
    std::string ce_n = "1-20";
    std::string ce_delta = "cluster";
    std::string ce_out;
    int ce_svg_n = 0;
    ce_cmd->add_option("--n", ce_n, "range a-b or list of n in [1,30]")->capture_default_str();
    ce_cmd->add_option("--delta", ce_delta, "concentration half-width, or 'cluster' for 2/n")->capture_default_str();
    ce_cmd->add_option("--out", ce_out, "directory for counterexample.csv and the SVG");
    ce_cmd->add_option("--svg-n", ce_svg_n, "draw the set for this n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*ce_cmd) {
            return run_counterexample_table(ce_n, ce_delta, ce_out, ce_svg_n);
        }

        tailkit::ExperimentConfig config;
        std::vector<std::pair<std::string, std::string>> settings;
        if (!config_path.empty()) {
            settings = tailkit::read_config_file(config_path);
        }
        for (const auto& [name, help] : value_options) {
            if (run_cmd->count("--" + name) > 0) settings.emplace_back(name, values[name]);
        }
        if (dump_samples) settings.emplace_back("dump-samples", "true");
        if (svg) settings.emplace_back("svg", "true");
        if (timing) settings.emplace_back("timing", "true");

        bool model_given = false;
        for (const auto& [key, value] : settings) {
            tailkit::apply_setting(config, key, value);
            if (key == "model") model_given = true;
        }
        // Single-model experiments pick their model when none is named.
        if (!model_given) {
            if (config.experiment == tailkit::ExperimentKind::UniformQQ) config.model.kind = tailkit::ModelKind::Uniform01;
            if (config.experiment == tailkit::ExperimentKind::ExpQQ) config.model.kind = tailkit::ModelKind::Exponential;
            if (config.experiment == tailkit::ExperimentKind::LimitsetDemo) config.model.kind = tailkit::ModelKind::ParetoLog;
        }
        tailkit::validate(config);

        const auto result = tailkit::run(config);
        const auto name = std::string(tailkit::to_string(config.experiment));
        tailkit::emit_csv(result.records, config.output_dir / (name + ".csv"));
        tailkit::emit_summary_csv(result.summary, config.output_dir / (name + "_summary.csv"));
        if (config.experiment == tailkit::ExperimentKind::LimitsetDemo) {
            tailkit::emit_point_set_csv(tailkit::limitset_curve(config.model, config.M),
                                        config.output_dir / "limitset_curve.csv");
        }
        print_summary(config, result);
        std::cout << "wrote " << (config.output_dir / (name + ".csv")).string() << "\n";
        return 0;
    } catch (const tailkit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const tailkit::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
