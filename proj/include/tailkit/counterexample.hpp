#pragma once

#include <cstdint>

#include "tailkit/qqsets.hpp"

namespace tailkit {

/// The set sequence
///
///   F_n = {(i/n, 0) : -n <= i <= n}
///       U {(c_j, c_j) : c_j = (1 + j/2^n)/n, 0 <= j <= 2^n}
///
/// which converges in Hausdorff distance to F = [-1, 1] x {0} while its
/// least-squares slope tends to 1 instead of 0: the tiny diagonal cluster
/// holds almost every point and drags the fit.
struct ExampleInstance {
    int n = 0;
    PointSet set;
    std::uint64_t k_n = 0;
    Point mean;
};

inline constexpr int kMaxMaterializedN = 30;

/// Materializes F_n for 1 <= n <= 30. Throws std::domain_error otherwise.
ExampleInstance build_example(int n);

/// 2^n + 2n + 2.
std::uint64_t example_cardinality(int n);

/// Both mean coordinates: 3(2^n + 1) / (2n k_n).
double example_mean(int n);

/// LS slope from the exact sum identities, without materializing points.
/// Valid for 1 <= n <= 62.
double example_slope_closed_form(int n);

/// (2^n + 1) / (2^n + 2n + 2), the share of the diagonal cluster.
double example_concentration_bound(int n);

/// F as a segment (-1, 0) -> (1, 0).
Segment example_limit();

/// Half-width 2/n. The cluster lies in [1/n, 2/n]^2 and the mean in
/// (0, 3/(2n)), so this square holds the whole cluster for every n.
double example_cluster_delta(int n);

struct ExampleDiagnostics {
    double hausdorff_to_limit = 0.0;
    double slope = 0.0;
    double concentration = 0.0;
    double delta = 0.0;
};

/// Hausdorff distance to F, generic ls_slope, and the concentration ratio in
/// the open square of half-width delta around the set mean.
ExampleDiagnostics verify_example(const ExampleInstance& instance, double delta);

}  // namespace tailkit
