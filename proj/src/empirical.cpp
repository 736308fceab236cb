#include "tailkit/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tailkit {

OrderedSample::OrderedSample(std::vector<double> data) : values_(std::move(data)) {
    if (values_.empty()) {
        throw std::domain_error("order_statistics: empty sample");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            std::ostringstream msg;
            msg << "order_statistics: non-finite value at index " << i;
            throw std::domain_error(msg.str());
        }
    }
    std::sort(values_.begin(), values_.end());
}

double OrderedSample::ascending_at(std::size_t i) const {
    if (i < 1 || i > values_.size()) {
        throw std::out_of_range("ascending_at: index out of range");
    }
    return values_[i - 1];
}

double OrderedSample::descending_at(std::size_t j) const {
    if (j < 1 || j > values_.size()) {
        throw std::out_of_range("descending_at: index out of range");
    }
    return values_[values_.size() - j];
}

OrderedSample order_statistics(std::span<const double> data) {
    return OrderedSample(std::vector<double>(data.begin(), data.end()));
}

double empirical_quantile(const OrderedSample& sample, double p) {
    if (!(p > 0.0) || p > 1.0) {
        std::ostringstream msg;
        msg << "empirical_quantile: p = " << p << " outside (0, 1]";
        throw std::domain_error(msg.str());
    }
    const auto n = sample.size();
    auto index = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * p));
    index = std::clamp<std::size_t>(index, 1, n);
    return sample.ascending_at(index);
}

double ks_statistic(const OrderedSample& sample, const DistributionModel& model) {
    const auto xs = sample.ascending();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(model, xs[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return d;
}

}  // namespace tailkit
