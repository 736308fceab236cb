#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tailkit/config.hpp"
#include "tailkit/empirical.hpp"
#include "tailkit/qqsets.hpp"
#include "tailkit/rng.hpp"
#include "tailkit/setmetrics.hpp"

namespace tailkit {

/// A computed value that broke a library invariant (CLI exit code 3).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);

/// Seed of the stream owned by one (experiment, n, replication) cell:
///
///   h = mix64(master); h = mix64(h ^ fnv1a64(label));
///   h = mix64(h ^ n);  h = mix64(h ^ (rep + gamma))
///
/// where mix64 is the SplitMix64 finalizer and gamma its Weyl constant.
/// Each step is a bijection of h, so distinct inputs at any single position
/// map to distinct seeds.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::size_t n,
                          std::size_t replication);

RngStream derive_stream(std::uint64_t master, std::string_view label, std::size_t n,
                        std::size_t replication);

struct ExperimentRecord {
    std::string experiment;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t rep = 0;
    std::uint64_t seed = 0;
    std::optional<double> hausdorff;  // empty on a window miss
    bool window_miss = false;
    std::optional<double> ls_slope;
    std::optional<double> hill;
    std::optional<double> km_ratio;
    std::optional<double> concentration;
    double runtime_ms = 0.0;
};

/// What one replication compares: a point cloud, the reference it should
/// approach, and the window both are cut to.
struct ExperimentView {
    PointSet points;
    LimitShape shape;
    std::optional<PointSet> curve;  // replaces `shape` for limitset_demo
    Window window;
};

/// Builds the view for an ordered sample. k is ignored by full-sample
/// experiments.
ExperimentView make_view(const ExperimentConfig& config, const OrderedSample& sample, std::size_t k);

/// Runs one (n, k, replication) cell on its derived stream. If
/// `sample_out` is given it receives the raw draws in generation order.
ExperimentRecord run_replication(const ExperimentConfig& config, std::size_t n, std::size_t k,
                                 std::size_t rep, std::vector<double>* sample_out = nullptr);

/// Counterexample rows for each n in the grid; rep is 0 and k holds k_n.
ExperimentRecord counterexample_record(const ExperimentConfig& config, std::size_t n);

struct CellSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t replications = 0;
    std::size_t window_misses = 0;
    std::optional<double> hausdorff_median;
    std::optional<double> hausdorff_mean;
    std::optional<double> hausdorff_q10;
    std::optional<double> hausdorff_q90;
    std::optional<double> ls_slope_mean;
    std::optional<double> ls_slope_median;
    std::optional<double> hill_mean;
    std::optional<double> km_ratio_mean;
    std::optional<double> concentration_mean;
};

struct RunResult {
    std::vector<ExperimentRecord> records;  // sorted by (n, rep)
    std::vector<CellSummary> summary;       // one per grid point, grid order
    /// Medians of the Hausdorff distance are nonincreasing along the grid.
    bool medians_nonincreasing = false;
    bool medians_strictly_decreasing = false;
    std::vector<std::string> warnings;
};

/// Runs every (n, replication) cell, in parallel over replications, then
/// sorts and summarizes. Output does not depend on the thread count. When
/// dump_samples or svg is set, files go under config.output_dir.
RunResult run(const ExperimentConfig& config);

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records);

/// Empirical quantile with linear interpolation between order statistics
/// (type 7). Used for summary bands only.
double summary_quantile(std::vector<double> values, double p);

}  // namespace tailkit
