#include "tailkit/counterexample.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tailkit/estimators.hpp"
#include "tailkit/setmetrics.hpp"

namespace tailkit {

namespace {

void require_n(int n, int max_n, const char* who) {
    if (n < 1 || n > max_n) {
        std::ostringstream msg;
        msg << who << ": n = " << n << " outside [1, " << max_n << "]";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

std::uint64_t example_cardinality(int n) {
    require_n(n, 62, "example_cardinality");
    return (std::uint64_t{1} << n) + 2 * static_cast<std::uint64_t>(n) + 2;
}

double example_mean(int n) {
    const double pow2 = std::ldexp(1.0, n);
    const double k = static_cast<double>(example_cardinality(n));
    return 3.0 * (pow2 + 1.0) / (2.0 * n * k);
}

double example_slope_closed_form(int n) {
    const double pow2 = std::ldexp(1.0, n);
    const double k = static_cast<double>(example_cardinality(n));
    const double nn = static_cast<double>(n) * n;
    // Both sums reduce to the cluster's centered second moment; the axis
    // points add sum_{|i|<=n} (i/n)^2 to the denominator only.
    const double cluster =
        (pow2 + 1.0) / nn * (2.0 + (pow2 + 0.5) / (3.0 * pow2) - 9.0 * (pow2 + 1.0) / (4.0 * k));
    const double axis = 2.0 * n * (n + 1.0) * (2.0 * n + 1.0) / (6.0 * nn);
    return cluster / (axis + cluster);
}

double example_concentration_bound(int n) {
    const double pow2 = std::ldexp(1.0, n);
    return (pow2 + 1.0) / static_cast<double>(example_cardinality(n));
}

Segment example_limit() { return {{-1.0, 0.0}, {1.0, 0.0}}; }

double example_cluster_delta(int n) {
    require_n(n, 62, "example_cluster_delta");
    return 2.0 / n;
}

ExampleInstance build_example(int n) {
    require_n(n, kMaxMaterializedN, "build_example");
    ExampleInstance inst;
    inst.n = n;
    inst.k_n = example_cardinality(n);
    inst.set.reserve(inst.k_n);
    const double nd = static_cast<double>(n);
    for (int i = -n; i <= n; ++i) {
        inst.set.push_back({i / nd, 0.0});
    }
    const std::uint64_t cluster = std::uint64_t{1} << n;
    const double pow2 = std::ldexp(1.0, n);
    for (std::uint64_t j = 0; j <= cluster; ++j) {
        const double c = (1.0 + static_cast<double>(j) / pow2) / nd;
        inst.set.push_back({c, c});
    }
    inst.mean = mean_point(inst.set);
    return inst;
}

ExampleDiagnostics verify_example(const ExampleInstance& instance, double delta) {
    ExampleDiagnostics d;
    d.delta = delta;
    d.hausdorff_to_limit = hausdorff(instance.set, example_limit());
    d.slope = ls_slope(instance.set);
    d.concentration = concentration_ratio(instance.set, instance.mean, delta);
    return d;
}

}  // namespace tailkit
