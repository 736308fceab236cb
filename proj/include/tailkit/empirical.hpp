#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tailkit/dists.hpp"

namespace tailkit {

/// Sorted copy of a sample, with both ascending (X_{i:n}) and descending
/// (X_{(j)}) 1-based accessors. Duplicates are kept.
class OrderedSample {
public:
    /// Sorts the data. Throws std::domain_error if it is empty or contains
    /// a non-finite value.
    explicit OrderedSample(std::vector<double> data);

    std::span<const double> ascending() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// X_{i:n}, 1 <= i <= n.
    double ascending_at(std::size_t i) const;
    /// X_{(j)}, 1 <= j <= n; X_{(1)} is the maximum.
    double descending_at(std::size_t j) const;

private:
    std::vector<double> values_;
};

OrderedSample order_statistics(std::span<const double> data);

/// F_n^{<-}(p) = X_{ceil(np):n} for 0 < p <= 1.
double empirical_quantile(const OrderedSample& sample, double p);

/// sup_x |F_n(x) - F(x)|, evaluated exactly at the jumps of F_n.
double ks_statistic(const OrderedSample& sample, const DistributionModel& model);

}  // namespace tailkit
