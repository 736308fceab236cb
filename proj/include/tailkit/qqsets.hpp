#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

#include "tailkit/dists.hpp"
#include "tailkit/empirical.hpp"

namespace tailkit {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
};

/// Finite multiset of plane points, kept in construction order. Consumers
/// treat it as unordered.
using PointSet = std::vector<Point>;

/// Closed, bounded line segment.
struct Segment {
    Point start;
    Point end;

    double length() const;
    /// start + t (end - start), t in [0, 1].
    Point at(double t) const;
};

enum class ShapeKind { Segment, Ray };

/// Idealized limit set: {anchor + t (1, slope)} for t in [0, extent]
/// (Segment) or t >= 0 (Ray).
struct LimitShape {
    ShapeKind kind = ShapeKind::Ray;
    Point anchor;
    double slope = 0.0;
    double extent = std::numeric_limits<double>::infinity();

    /// Requires from.x < to.x.
    static LimitShape segment(Point from, Point to);
    static LimitShape ray(Point anchor, double slope);

    Point at(double t) const { return {anchor.x + t, anchor.y + t * slope}; }
    /// Throws std::logic_error for a ray.
    Segment as_segment() const;
};

/// {(F^{<-}(i/(n+1)), X_{i:n}) : 1 <= i <= n}.
PointSet qq_set(const OrderedSample& sample, const DistributionModel& model);

/// Log-scale Pareto QQ set {(-log(1 - i/(n+1)), log X_{i:n})}.
PointSet pareto_log_qq_set(const OrderedSample& sample);

/// Upper-k log QQ set {(-log(j/(n+1)), log X_{(j)}) : 1 <= j <= k}.
PointSet thresholded_qq_set(const OrderedSample& sample, std::size_t k);

/// {(-log(j/k), log(X_{(j)} / X_{(k)})) : 1 <= j <= k}. The j = k point is
/// the origin.
PointSet centered_qq_set(const OrderedSample& sample, std::size_t k);

/// a_n = (-log(k/(n+1)), log X_{(k)}), the shift with
/// thresholded_qq_set = centered_qq_set + a_n.
Point threshold_shift(const OrderedSample& sample, std::size_t k);

PointSet translate(const PointSet& points, Point shift);

/// Which limit theorem a QQ set is compared against.
enum class QQContext {
    Uniform,      // segment (0,0)-(1,1)
    General,      // diagonal ray from (a, a), a = left end of support
    Exponential,  // diagonal ray from the origin
    ParetoLogQQ,  // ray from the origin with slope 1/alpha
    Thresholded,  // ray with slope 1/alpha anchored at a_n
};

/// Limit shape for a context. Throws std::invalid_argument when the model
/// does not fit the context (e.g. a log-QQ limit for a uniform model).
LimitShape limit_shape_for(QQContext context, const DistributionModel& model,
                           Point shift = {});

/// CSV with header "x,y" and 17 significant digits per coordinate.
void write_point_set_csv(std::ostream& out, const PointSet& points);

/// Inverse of write_point_set_csv. Throws std::runtime_error on bad input.
PointSet read_point_set_csv(std::istream& in);

}  // namespace tailkit
