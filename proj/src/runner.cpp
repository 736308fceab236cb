#include "tailkit/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "tailkit/counterexample.hpp"
#include "tailkit/estimators.hpp"
#include "tailkit/limitset.hpp"
#include "tailkit/report.hpp"

namespace tailkit {

namespace {

bool is_tail_experiment(ExperimentKind kind) {
    return kind == ExperimentKind::Thresholded || kind == ExperimentKind::SlopeConsistency;
}

std::string cell_name(const ExperimentConfig& config, std::size_t n, std::size_t rep) {
    return std::string(to_string(config.experiment)) + "_n" + std::to_string(n) + "_rep" +
           std::to_string(rep);
}

std::optional<double> mean_of(const std::vector<double>& v) {
    if (v.empty()) return std::nullopt;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::optional<double> quantile_of(const std::vector<double>& v, double p) {
    if (v.empty()) return std::nullopt;
    return summary_quantile(v, p);
}

// Window alpha for K_M: the simulation alpha, or 1/Hill from the sample.
double window_alpha(const ExperimentConfig& config, const OrderedSample& sample, std::size_t k) {
    if (config.window_alpha == WindowAlpha::Known) return config.model.alpha;
    const double h = hill_estimator(sample, k);
    if (!(h > 0.0)) {
        throw InvariantViolation("plug-in window: Hill estimate is zero");
    }
    return 1.0 / h;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::size_t n,
                          std::size_t replication) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ fnv1a64(label));
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    h = mix64(h ^ (static_cast<std::uint64_t>(replication) + RngStream::kGamma));
    return h;
}

RngStream derive_stream(std::uint64_t master, std::string_view label, std::size_t n,
                        std::size_t replication) {
    return RngStream(derive_seed(master, label, n, replication));
}

ExperimentView make_view(const ExperimentConfig& config, const OrderedSample& sample, std::size_t k) {
    const auto& model = config.model;
    const double M = config.M;
    switch (config.experiment) {
        case ExperimentKind::UniformQQ:
            return {qq_set(sample, DistributionModel::uniform01()),
                    limit_shape_for(QQContext::Uniform, model), std::nullopt,
                    Window::make(0.0, 1.0, 0.0, 1.0)};
        case ExperimentKind::GeneralQQ: {
            const Window w = model.kind == ModelKind::Uniform01 ? Window::make(0.0, 1.0, 0.0, 1.0)
                                                                : Window::make(0.0, M, 0.0, M);
            return {qq_set(sample, model), limit_shape_for(QQContext::General, model), std::nullopt, w};
        }
        case ExperimentKind::ExpQQ:
            return {qq_set(sample, model), limit_shape_for(QQContext::Exponential, model),
                    std::nullopt, Window::make(0.0, M, 0.0, M)};
        case ExperimentKind::ParetoLogQQ:
            return {pareto_log_qq_set(sample), limit_shape_for(QQContext::ParetoLogQQ, model),
                    std::nullopt, tail_window(M, model.alpha)};
        case ExperimentKind::Thresholded:
        case ExperimentKind::SlopeConsistency:
            // Compared after removing the random shift a_n, which leaves
            // Hausdorff distances unchanged.
            return {centered_qq_set(sample, k), LimitShape::ray({0.0, 0.0}, 1.0 / model.alpha),
                    std::nullopt, tail_window(M, window_alpha(config, sample, k))};
        case ExperimentKind::LimitsetDemo:
            return {pareto_log_qq_set(sample), LimitShape::ray({0.0, 0.0}, 1.0 / model.alpha),
                    limitset_curve(model, M), Window::make(0.0, model.alpha * M, -M, M)};
        case ExperimentKind::Counterexample:
            break;
    }
    throw std::invalid_argument("make_view: experiment has no random QQ view");
}

ExperimentRecord run_replication(const ExperimentConfig& config, std::size_t n, std::size_t k,
                                 std::size_t rep, std::vector<double>* sample_out) {
    const auto started = std::chrono::steady_clock::now();
    const auto label = to_string(config.experiment);

    ExperimentRecord rec;
    rec.experiment = std::string(label);
    rec.n = n;
    rec.rep = rep;
    rec.seed = derive_seed(config.master_seed, label, n, rep);

    RngStream stream(rec.seed);
    std::vector<double> draws = sample(config.model, n, stream);
    if (sample_out != nullptr) *sample_out = draws;
    const OrderedSample ordered(std::move(draws));

    const bool tail = is_tail_experiment(config.experiment);
    rec.k = tail ? k : n;
    const ExperimentView view = make_view(config, ordered, k);
    const PointSet inside = truncate(view.points, view.window);

    if (view.curve) {
        const PointSet curve_inside = truncate(*view.curve, view.window);
        if (!inside.empty() && !curve_inside.empty()) {
            rec.hausdorff = hausdorff(inside, curve_inside);
        }
    } else if (const auto seg = clip_shape(view.shape, view.window); seg && !inside.empty()) {
        rec.hausdorff = hausdorff(inside, *seg);
    }
    rec.window_miss = !rec.hausdorff.has_value();

    if (tail) {
        rec.ls_slope = ls_slope(view.points);
        rec.hill = hill_estimator(ordered, k);
        rec.km_ratio = static_cast<double>(inside.size()) / static_cast<double>(k);
    } else if (view.points.size() >= 2) {
        rec.ls_slope = ls_slope(view.points);
    }
    if (!inside.empty()) {
        rec.concentration = concentration_ratio(inside, mean_point(inside), config.delta);
    }
    if (rec.hausdorff && !(*rec.hausdorff >= 0.0)) {
        throw InvariantViolation("negative or NaN Hausdorff distance in " + cell_name(config, n, rep));
    }

    if (config.svg && rep == 0) {
        const auto path = config.output_dir / (cell_name(config, n, rep) + ".svg");
        emit_svg(view.points, view.shape, view.window, path, cell_name(config, n, rep),
                 view.curve ? &*view.curve : nullptr);
    }
    if (config.timing) {
        rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                             .count();
    }
    return rec;
}

ExperimentRecord counterexample_record(const ExperimentConfig& config, std::size_t n) {
    const auto started = std::chrono::steady_clock::now();
    const auto inst = build_example(static_cast<int>(n));
    const auto diag = verify_example(inst, config.delta);
    ExperimentRecord rec;
    rec.experiment = std::string(to_string(ExperimentKind::Counterexample));
    rec.n = n;
    rec.k = inst.k_n;
    rec.hausdorff = diag.hausdorff_to_limit;
    rec.ls_slope = diag.slope;
    rec.concentration = diag.concentration;
    if (config.svg) {
        const Segment limit = example_limit();
        const Window w = Window::make(-1.0, 1.0, -0.25, std::max(0.25, 2.0 / static_cast<double>(n)));
        emit_svg(inst.set, LimitShape::segment(limit.start, limit.end), w,
                 config.output_dir / ("counterexample_n" + std::to_string(n) + "_rep0.svg"),
                 "counterexample n=" + std::to_string(n));
    }
    if (config.timing) {
        rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                             .count();
    }
    return rec;
}

double summary_quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::domain_error("summary_quantile: no values");
    }
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records) {
    std::vector<std::size_t> grid;
    for (const auto& r : records) {
        if (std::find(grid.begin(), grid.end(), r.n) == grid.end()) grid.push_back(r.n);
    }
    std::vector<CellSummary> out;
    for (auto n : grid) {
        CellSummary s;
        s.n = n;
        std::vector<double> dist, slope, hill, km, conc;
        for (const auto& r : records) {
            if (r.n != n) continue;
            s.k = r.k;
            ++s.replications;
            if (r.window_miss) ++s.window_misses;
            if (r.hausdorff) dist.push_back(*r.hausdorff);
            if (r.ls_slope) slope.push_back(*r.ls_slope);
            if (r.hill) hill.push_back(*r.hill);
            if (r.km_ratio) km.push_back(*r.km_ratio);
            if (r.concentration) conc.push_back(*r.concentration);
        }
        s.hausdorff_median = quantile_of(dist, 0.5);
        s.hausdorff_mean = mean_of(dist);
        s.hausdorff_q10 = quantile_of(dist, 0.1);
        s.hausdorff_q90 = quantile_of(dist, 0.9);
        s.ls_slope_mean = mean_of(slope);
        s.ls_slope_median = quantile_of(slope, 0.5);
        s.hill_mean = mean_of(hill);
        s.km_ratio_mean = mean_of(km);
        s.concentration_mean = mean_of(conc);
        out.push_back(s);
    }
    return out;
}

RunResult run(const ExperimentConfig& config) {
    validate(config);
    RunResult result;

    if (config.experiment == ExperimentKind::Counterexample) {
        for (auto n : config.n_grid) {
            result.records.push_back(counterexample_record(config, n));
        }
    } else {
        struct Task {
            std::size_t n, k, rep;
        };
        std::vector<Task> tasks;
        for (auto n : config.n_grid) {
            for (std::size_t rep = 0; rep < config.replications; ++rep) {
                tasks.push_back({n, config.k_rule.k_for(n), rep});
            }
        }
        result.records.resize(tasks.size());

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                try {
                    const auto& t = tasks[i];
                    std::vector<double> raw;
                    result.records[i] = run_replication(config, t.n, t.k, t.rep,
                                                        config.dump_samples ? &raw : nullptr);
                    if (config.dump_samples) {
                        emit_sample(raw, config.output_dir / "samples" /
                                             (cell_name(config, t.n, t.rep) + ".txt"));
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = tasks.size();
                }
            }
        };
        unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        }
        if (failure) std::rethrow_exception(failure);
    }

    std::stable_sort(result.records.begin(), result.records.end(), [](const auto& a, const auto& b) {
        return a.n != b.n ? a.n < b.n : a.rep < b.rep;
    });
    // Summaries follow grid order, which may differ from sorted order.
    auto summary = summarize(result.records);
    for (auto n : config.n_grid) {
        const auto it = std::find_if(summary.begin(), summary.end(), [n](const auto& s) { return s.n == n; });
        if (it != summary.end()) result.summary.push_back(*it);
    }

    result.medians_nonincreasing = true;
    result.medians_strictly_decreasing = true;
    std::optional<double> previous;
    for (const auto& s : result.summary) {
        const double miss_rate = static_cast<double>(s.window_misses) / static_cast<double>(s.replications);
        if (miss_rate > 0.5) {
            result.warnings.push_back("n = " + std::to_string(s.n) + ": window miss rate " +
                                      std::to_string(miss_rate) + " exceeds 50%");
        }
        if (!s.hausdorff_median) {
            result.medians_nonincreasing = false;
            result.medians_strictly_decreasing = false;
            continue;
        }
        if (previous) {
            if (*s.hausdorff_median > *previous) result.medians_nonincreasing = false;
            if (!(*s.hausdorff_median < *previous)) result.medians_strictly_decreasing = false;
        }
        previous = s.hausdorff_median;
    }
    return result;
}

}  // namespace tailkit
