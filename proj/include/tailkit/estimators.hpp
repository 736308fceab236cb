#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "tailkit/empirical.hpp"
#include "tailkit/qqsets.hpp"

namespace tailkit {

/// Raised when a least-squares fit has fewer than two points or no spread
/// in x.
class DegenerateDesign : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Point mean_point(const PointSet& points);

/// Ordinary least-squares slope sum (y - ybar)(x - xbar) / sum (x - xbar)^2,
/// accumulated in two compensated passes.
double ls_slope(const PointSet& points);

/// Least-squares slope of the upper-k log QQ plot, an estimate of 1/alpha.
/// Equal to ls_slope(thresholded_qq_set(sample, k)) up to rounding.
double qq_slope_estimator(const OrderedSample& sample, std::size_t k);

/// Hill estimator (1/k) sum_{i<=k} log(X_{(i)} / X_{(k)}); needs 2 <= k <= n
/// and X_{(k)} > 0.
double hill_estimator(const OrderedSample& sample, std::size_t k);

struct DesignMoments {
    double sbar_x = 0.0;   // (1/k) sum -log(i/k)
    double sbar_xx = 0.0;  // (1/k) sum log(i/k)^2
};

/// Exact finite sums over the design points -log(i/k); they tend to 1 and 2.
DesignMoments design_moments(std::size_t k);

/// Fraction of points strictly inside the open square of half-width delta
/// around center.
double concentration_ratio(const PointSet& points, Point center, double delta);

/// (1/k) #{i <= n : X_{(i)} / X_{(k)} > y}, the empirical tail measure of
/// (y, inf]. Its limit is y^-alpha.
double tail_measure(const OrderedSample& sample, std::size_t k, double y);

struct WindowedMoments {
    std::size_t k_M = 0;
    double sbar_x = 0.0;
    double sbar_xx = 0.0;
    double sbar_y = 0.0;
    double sbar_xy = 0.0;
};

/// Averages over centered_qq_set(sample, k) restricted to
/// K_M = [0, M] x [0, 2M/alpha_hint]. nullopt signals a window miss.
std::optional<WindowedMoments> windowed_moments(const OrderedSample& sample, std::size_t k,
                                                double M, double alpha_hint);

struct WindowLimits {
    double mu_x = 0.0;  // E[E | E <= M] for E ~ Exp(1)
    double mu_y = 0.0;  // (1 - e^-M)^-1 int_0^{M/alpha} s e^{-alpha s} ds
};

/// In-probability limits of the windowed means, by adaptive Gauss-Kronrod
/// quadrature (tolerance 1e-10).
WindowLimits window_limits(double M, double alpha);

struct EstimatorReport {
    std::size_t n = 0;
    std::size_t k = 0;
    double ls_slope = 0.0;
    double hill = 0.0;
    double sbar_x = 0.0;
    double sbar_xx = 0.0;
    double sbar_y = 0.0;
    double sbar_xy = 0.0;
    std::optional<double> concentration;
    std::optional<double> window_M;
    std::optional<std::size_t> k_M;
};

struct ReportOptions {
    std::optional<double> M;  // window height needs alpha_hint
    double alpha_hint = 1.0;
    std::optional<double> delta;  // concentration around the windowed mean
};

/// All the upper-k statistics for one sample in one pass over the centered
/// QQ set.
EstimatorReport tail_report(const OrderedSample& sample, std::size_t k,
                            const ReportOptions& options = {});

}  // namespace tailkit
