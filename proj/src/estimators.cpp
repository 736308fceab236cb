#include "tailkit/estimators.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

#include "tailkit/setmetrics.hpp"
#include "tailkit/summation.hpp"

namespace tailkit {

namespace {

void require_tail_k(const OrderedSample& sample, std::size_t k, const char* who) {
    if (k < 2 || k > sample.size()) {
        std::ostringstream msg;
        msg << who << ": k = " << k << " outside [2, " << sample.size() << "]";
        throw std::domain_error(msg.str());
    }
    if (!(sample.descending_at(k) > 0.0)) {
        std::ostringstream msg;
        msg << who << ": threshold order statistic X_(" << k << ") must be positive";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

Point mean_point(const PointSet& points) {
    if (points.empty()) {
        throw std::domain_error("mean_point: empty point set");
    }
    CompensatedSum sx;
    CompensatedSum sy;
    for (const auto& p : points) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(points.size());
    return {sx.value() / n, sy.value() / n};
}

double ls_slope(const PointSet& points) {
    if (points.size() < 2) {
        throw DegenerateDesign("ls_slope: need at least two points");
    }
    const Point c = mean_point(points);
    CompensatedSum sxy;
    CompensatedSum sxx;
    for (const auto& p : points) {
        const double dx = p.x - c.x;
        sxy += dx * (p.y - c.y);
        sxx += dx * dx;
    }
    if (!(sxx.value() > 0.0)) {
        throw DegenerateDesign("ls_slope: all x coordinates are equal");
    }
    return sxy.value() / sxx.value();
}

double qq_slope_estimator(const OrderedSample& sample, std::size_t k) {
    return ls_slope(centered_qq_set(sample, k));
}

double hill_estimator(const OrderedSample& sample, std::size_t k) {
    require_tail_k(sample, k, "hill_estimator");
    CompensatedSum logs;
    for (std::size_t i = 1; i <= k; ++i) {
        logs += std::log(sample.descending_at(i));
    }
    const double h = logs.value() / static_cast<double>(k) - std::log(sample.descending_at(k));
    // Every term is >= 0; clamp rounding noise when all values coincide.
    return std::max(h, 0.0);
}

DesignMoments design_moments(std::size_t k) {
    if (k < 1) {
        throw std::domain_error("design_moments: k must be at least 1");
    }
    const double kd = static_cast<double>(k);
    CompensatedSum sx;
    CompensatedSum sxx;
    for (std::size_t i = 1; i <= k; ++i) {
        const double x = std::log(kd / static_cast<double>(i));
        sx += x;
        sxx += x * x;
    }
    return {sx.value() / kd, sxx.value() / kd};
}

double concentration_ratio(const PointSet& points, Point center, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("concentration_ratio: delta must be positive");
    }
    if (points.empty()) {
        throw std::domain_error("concentration_ratio: empty point set");
    }
    std::size_t inside = 0;
    for (const auto& p : points) {
        if (std::abs(p.x - center.x) < delta && std::abs(p.y - center.y) < delta) {
            ++inside;
        }
    }
    return static_cast<double>(inside) / static_cast<double>(points.size());
}

double tail_measure(const OrderedSample& sample, std::size_t k, double y) {
    require_tail_k(sample, k, "tail_measure");
    if (!(y > 0.0)) {
        throw std::domain_error("tail_measure: y must be positive");
    }
    const double threshold = sample.descending_at(k);
    std::size_t count = 0;
    // Descending order: stop at the first ratio that is not above y.
    for (std::size_t i = 1; i <= sample.size(); ++i) {
        if (!(sample.descending_at(i) / threshold > y)) break;
        ++count;
    }
    return static_cast<double>(count) / static_cast<double>(k);
}

std::optional<WindowedMoments> windowed_moments(const OrderedSample& sample, std::size_t k,
                                                double M, double alpha_hint) {
    const Window window = tail_window(M, alpha_hint);
    const PointSet inside = truncate(centered_qq_set(sample, k), window);
    if (inside.empty()) {
        return std::nullopt;
    }
    CompensatedSum sx, sxx, sy, sxy;
    for (const auto& p : inside) {
        sx += p.x;
        sxx += p.x * p.x;
        sy += p.y;
        sxy += p.x * p.y;
    }
    const double m = static_cast<double>(inside.size());
    return WindowedMoments{inside.size(), sx.value() / m, sxx.value() / m, sy.value() / m,
                           sxy.value() / m};
}

WindowLimits window_limits(double M, double alpha) {
    if (!(M > 0.0) || !(alpha > 0.0)) {
        throw std::invalid_argument("window_limits: M and alpha must be positive");
    }
    using boost::math::quadrature::gauss_kronrod;
    constexpr double kTolerance = 1e-10;
    constexpr unsigned kMaxDepth = 30;
    const double mass = -std::expm1(-M);
    const double ix = gauss_kronrod<double, 61>::integrate(
        [](double y) { return y * std::exp(-y); }, 0.0, M, kMaxDepth, kTolerance);
    const double iy = gauss_kronrod<double, 61>::integrate(
        [alpha](double s) { return s * std::exp(-alpha * s); }, 0.0, M / alpha, kMaxDepth,
        kTolerance);
    return {ix / mass, iy / mass};
}

EstimatorReport tail_report(const OrderedSample& sample, std::size_t k,
                            const ReportOptions& options) {
    EstimatorReport report;
    report.n = sample.size();
    report.k = k;
    report.hill = hill_estimator(sample, k);

    const PointSet centered = centered_qq_set(sample, k);
    report.ls_slope = ls_slope(centered);
    CompensatedSum sx, sxx, sy, sxy;
    for (const auto& p : centered) {
        sx += p.x;
        sxx += p.x * p.x;
        sy += p.y;
        sxy += p.x * p.y;
    }
    const double kd = static_cast<double>(k);
    report.sbar_x = sx.value() / kd;
    report.sbar_xx = sxx.value() / kd;
    report.sbar_y = sy.value() / kd;
    report.sbar_xy = sxy.value() / kd;

    const PointSet* cloud = &centered;
    PointSet windowed;
    if (options.M) {
        windowed = truncate(centered, tail_window(*options.M, options.alpha_hint));
        report.window_M = options.M;
        report.k_M = windowed.size();
        cloud = &windowed;
    }
    if (options.delta && !cloud->empty()) {
        report.concentration = concentration_ratio(*cloud, mean_point(*cloud), *options.delta);
    }
    return report;
}

}  // namespace tailkit
