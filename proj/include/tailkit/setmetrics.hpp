#pragma once

#include <cstddef>
#include <optional>

#include "tailkit/qqsets.hpp"

namespace tailkit {

/// Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi].
struct Window {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    /// Validating constructor: finite bounds with lo <= hi.
    static Window make(double x_lo, double x_hi, double y_lo, double y_hi);

    bool contains(Point p) const noexcept {
        return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
    }
};

/// K_M = [0, M] x [0, 2M/alpha].
Window tail_window(double M, double alpha);

/// Points inside the closed window; may be empty.
PointSet truncate(const PointSet& points, const Window& window);

/// Intersection of a shape with the window as a segment, or nullopt when
/// they do not meet. A shape touching only a corner yields a zero-length
/// segment.
std::optional<Segment> clip_shape(const LimitShape& shape, const Window& window);

/// Number of intervals used to discretize a segment: the spacing is at
/// most 1e-4 of the segment length, so the directed segment-to-set
/// distance is under-estimated by at most spacing / 2.
inline constexpr std::size_t kSegmentIntervals = 10000;

double point_segment_distance(Point p, const Segment& segment);

/// sup over `from` of the distance to the nearest element of `to`.
double directed_hausdorff(const PointSet& from, const PointSet& to);
/// Exact: projections are clamped to the segment.
double directed_hausdorff(const PointSet& from, const Segment& to);
/// Discretized with kSegmentIntervals + 1 evenly spaced samples.
double directed_hausdorff(const Segment& from, const PointSet& to);

/// Hausdorff distance with Euclidean ground metric. Throws
/// std::domain_error on an empty operand.
double hausdorff(const PointSet& a, const PointSet& b);
double hausdorff(const PointSet& a, const Segment& b);
double hausdorff(const Segment& a, const PointSet& b);

/// True iff every target point lies in the open delta-swelling of cover.
bool swelling_contains(const PointSet& cover, const PointSet& target, double delta);
bool swelling_contains(const Segment& cover, const PointSet& target, double delta);

}  // namespace tailkit
