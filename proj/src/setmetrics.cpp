#include "tailkit/setmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tailkit {

namespace {

// Implicit kd-tree: the median of each range sits at its midpoint, split on
// x at even depth and y at odd depth.
class NearestIndex {
public:
    explicit NearestIndex(const PointSet& points) : nodes_(points) {
        build(0, nodes_.size(), 0);
    }

    double nearest_squared(Point q) const {
        double best = std::numeric_limits<double>::infinity();
        search(q, 0, nodes_.size(), 0, best);
        return best;
    }

private:
    static double coord(const Point& p, int axis) { return axis == 0 ? p.x : p.y; }

    void build(std::size_t lo, std::size_t hi, int axis) {
        if (hi - lo <= 1) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        std::nth_element(nodes_.begin() + static_cast<std::ptrdiff_t>(lo),
                         nodes_.begin() + static_cast<std::ptrdiff_t>(mid),
                         nodes_.begin() + static_cast<std::ptrdiff_t>(hi),
                         [axis](const Point& a, const Point& b) {
                             return coord(a, axis) < coord(b, axis);
                         });
        build(lo, mid, 1 - axis);
        build(mid + 1, hi, 1 - axis);
    }

    void search(Point q, std::size_t lo, std::size_t hi, int axis, double& best) const {
        if (lo >= hi) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        const Point& p = nodes_[mid];
        const double dx = p.x - q.x;
        const double dy = p.y - q.y;
        best = std::min(best, dx * dx + dy * dy);
        const double gap = coord(q, axis) - coord(p, axis);
        const bool left_first = gap < 0.0;
        if (left_first) {
            search(q, lo, mid, 1 - axis, best);
            if (gap * gap < best) search(q, mid + 1, hi, 1 - axis, best);
        } else {
            search(q, mid + 1, hi, 1 - axis, best);
            if (gap * gap < best) search(q, lo, mid, 1 - axis, best);
        }
    }

    PointSet nodes_;
};

void require_nonempty(const PointSet& s, const char* who) {
    if (s.empty()) {
        throw std::domain_error(std::string(who) + ": empty point set");
    }
}

}  // namespace

Window Window::make(double x_lo, double x_hi, double y_lo, double y_hi) {
    const bool finite = std::isfinite(x_lo) && std::isfinite(x_hi) && std::isfinite(y_lo) &&
                        std::isfinite(y_hi);
    if (!finite || x_lo > x_hi || y_lo > y_hi) {
        std::ostringstream msg;
        msg << "Window: invalid bounds [" << x_lo << ", " << x_hi << "] x [" << y_lo << ", " << y_hi
            << "]";
        throw std::invalid_argument(msg.str());
    }
    return {x_lo, x_hi, y_lo, y_hi};
}

Window tail_window(double M, double alpha) {
    if (!(M > 0.0) || !(alpha > 0.0)) {
        throw std::invalid_argument("tail_window: M and alpha must be positive");
    }
    return Window::make(0.0, M, 0.0, 2.0 * M / alpha);
}

PointSet truncate(const PointSet& points, const Window& window) {
    PointSet out;
    for (const auto& p : points) {
        if (window.contains(p)) out.push_back(p);
    }
    return out;
}

std::optional<Segment> clip_shape(const LimitShape& shape, const Window& window) {
    // Liang-Barsky on anchor + t (1, slope), t in [0, extent].
    double t0 = 0.0;
    double t1 = shape.extent;
    auto clip = [&](double p, double q) {
        // Constraint p * t <= q.
        if (p == 0.0) return q >= 0.0;
        const double r = q / p;
        if (p < 0.0) {
            t0 = std::max(t0, r);
        } else {
            t1 = std::min(t1, r);
        }
        return t0 <= t1;
    };
    const Point a = shape.anchor;
    if (!clip(-1.0, a.x - window.x_lo)) return std::nullopt;
    if (!clip(1.0, window.x_hi - a.x)) return std::nullopt;
    if (!clip(-shape.slope, a.y - window.y_lo)) return std::nullopt;
    if (!clip(shape.slope, window.y_hi - a.y)) return std::nullopt;
    if (!std::isfinite(t1)) return std::nullopt;
    return Segment{shape.at(t0), shape.at(t1)};
}

double point_segment_distance(Point p, const Segment& segment) {
    const double dx = segment.end.x - segment.start.x;
    const double dy = segment.end.y - segment.start.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - segment.start.x) * dx + (p.y - segment.start.y) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    const Point q = segment.at(t);
    return std::hypot(p.x - q.x, p.y - q.y);
}

double directed_hausdorff(const PointSet& from, const PointSet& to) {
    require_nonempty(from, "directed_hausdorff");
    require_nonempty(to, "directed_hausdorff");
    const NearestIndex index(to);
    double worst = 0.0;
    for (const auto& p : from) {
        worst = std::max(worst, index.nearest_squared(p));
    }
    return std::sqrt(worst);
}

double directed_hausdorff(const PointSet& from, const Segment& to) {
    require_nonempty(from, "directed_hausdorff");
    double worst = 0.0;
    for (const auto& p : from) {
        worst = std::max(worst, point_segment_distance(p, to));
    }
    return worst;
}

double directed_hausdorff(const Segment& from, const PointSet& to) {
    require_nonempty(to, "directed_hausdorff");
    const NearestIndex index(to);
    const std::size_t intervals = from.length() > 0.0 ? kSegmentIntervals : 0;
    double worst = 0.0;
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = intervals == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(intervals);
        worst = std::max(worst, index.nearest_squared(from.at(t)));
    }
    return std::sqrt(worst);
}

double hausdorff(const PointSet& a, const PointSet& b) {
    require_nonempty(a, "hausdorff");
    require_nonempty(b, "hausdorff");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff(const PointSet& a, const Segment& b) {
    require_nonempty(a, "hausdorff");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff(const Segment& a, const PointSet& b) { return hausdorff(b, a); }

bool swelling_contains(const PointSet& cover, const PointSet& target, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("swelling_contains: delta must be positive");
    }
    if (target.empty()) return true;
    if (cover.empty()) return false;
    const NearestIndex index(cover);
    const double d2 = delta * delta;
    return std::all_of(target.begin(), target.end(),
                       [&](const Point& p) { return index.nearest_squared(p) < d2; });
}

bool swelling_contains(const Segment& cover, const PointSet& target, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("swelling_contains: delta must be positive");
    }
    return std::all_of(target.begin(), target.end(),
                       [&](const Point& p) { return point_segment_distance(p, cover) < delta; });
}

}  // namespace tailkit
