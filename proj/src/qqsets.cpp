#include "tailkit/qqsets.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tailkit/format.hpp"

namespace tailkit {

namespace {

void require_k(const OrderedSample& sample, std::size_t k, const char* who) {
    if (k < 1 || k > sample.size()) {
        std::ostringstream msg;
        msg << who << ": k = " << k << " outside [1, " << sample.size() << "]";
        throw std::domain_error(msg.str());
    }
}

double checked_log(double v, const char* who) {
    if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << who << ": nonpositive value " << v << " under log transform";
        throw std::domain_error(msg.str());
    }
    return std::log(v);
}

}  // namespace

double Segment::length() const { return std::hypot(end.x - start.x, end.y - start.y); }

Point Segment::at(double t) const {
    return {start.x + t * (end.x - start.x), start.y + t * (end.y - start.y)};
}

LimitShape LimitShape::segment(Point from, Point to) {
    if (!(from.x < to.x)) {
        throw std::invalid_argument("LimitShape::segment: requires from.x < to.x");
    }
    return {ShapeKind::Segment, from, (to.y - from.y) / (to.x - from.x), to.x - from.x};
}

LimitShape LimitShape::ray(Point anchor, double slope) {
    return {ShapeKind::Ray, anchor, slope, std::numeric_limits<double>::infinity()};
}

Segment LimitShape::as_segment() const {
    if (kind != ShapeKind::Segment) {
        throw std::logic_error("LimitShape::as_segment: shape is a ray");
    }
    return {anchor, at(extent)};
}

PointSet qq_set(const OrderedSample& sample, const DistributionModel& model) {
    const auto xs = sample.ascending();
    const double denom = static_cast<double>(xs.size() + 1);
    PointSet out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.push_back({quantile(model, static_cast<double>(i + 1) / denom), xs[i]});
    }
    return out;
}

PointSet pareto_log_qq_set(const OrderedSample& sample) {
    const auto xs = sample.ascending();
    const double denom = static_cast<double>(xs.size() + 1);
    PointSet out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // -log(1 - i/(n+1)) = log((n+1)/(n+1-i))
        const double x = std::log(denom / (denom - static_cast<double>(i + 1)));
        out.push_back({x, checked_log(xs[i], "pareto_log_qq_set")});
    }
    return out;
}

PointSet thresholded_qq_set(const OrderedSample& sample, std::size_t k) {
    require_k(sample, k, "thresholded_qq_set");
    const double denom = static_cast<double>(sample.size() + 1);
    PointSet out;
    out.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
        out.push_back({std::log(denom / static_cast<double>(j)),
                       checked_log(sample.descending_at(j), "thresholded_qq_set")});
    }
    return out;
}

PointSet centered_qq_set(const OrderedSample& sample, std::size_t k) {
    require_k(sample, k, "centered_qq_set");
    const double threshold = sample.descending_at(k);
    if (!(threshold > 0.0)) {
        throw std::domain_error("centered_qq_set: threshold order statistic must be positive");
    }
    const double kd = static_cast<double>(k);
    PointSet out;
    out.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
        out.push_back({std::log(kd / static_cast<double>(j)),
                       std::log(sample.descending_at(j) / threshold)});
    }
    return out;
}

Point threshold_shift(const OrderedSample& sample, std::size_t k) {
    require_k(sample, k, "threshold_shift");
    const double denom = static_cast<double>(sample.size() + 1);
    return {std::log(denom / static_cast<double>(k)),
            checked_log(sample.descending_at(k), "threshold_shift")};
}

PointSet translate(const PointSet& points, Point shift) {
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(p + shift);
    }
    return out;
}

LimitShape limit_shape_for(QQContext context, const DistributionModel& model, Point shift) {
    const bool regularly_varying =
        model.kind == ModelKind::Pareto || model.kind == ModelKind::ParetoLog;
    switch (context) {
        case QQContext::Uniform:
            return LimitShape::segment({0.0, 0.0}, {1.0, 1.0});
        case QQContext::General: {
            if (model.kind == ModelKind::Uniform01) {
                return LimitShape::segment({0.0, 0.0}, {1.0, 1.0});
            }
            const double a = support_lower(model);
            return LimitShape::ray({a, a}, 1.0);
        }
        case QQContext::Exponential:
            if (model.kind != ModelKind::Exponential) {
                throw std::invalid_argument("limit_shape_for: exponential context needs an exponential model");
            }
            return LimitShape::ray({0.0, 0.0}, 1.0);
        case QQContext::ParetoLogQQ:
            if (model.kind != ModelKind::Pareto) {
                throw std::invalid_argument("limit_shape_for: log-QQ ray applies to the Pareto model only");
            }
            return LimitShape::ray({0.0, 0.0}, 1.0 / model.alpha);
        case QQContext::Thresholded:
            if (!regularly_varying) {
                throw std::invalid_argument("limit_shape_for: thresholded context needs a regularly varying model");
            }
            return LimitShape::ray(shift, 1.0 / model.alpha);
    }
    throw std::invalid_argument("limit_shape_for: unknown context");
}

void write_point_set_csv(std::ostream& out, const PointSet& points) {
    out << "x,y\n";
    for (const auto& p : points) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
}

PointSet read_point_set_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y") {
        throw std::runtime_error("read_point_set_csv: missing 'x,y' header");
    }
    PointSet out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("read_point_set_csv: malformed row '" + line + "'");
        }
        try {
            out.push_back({parse_double(std::string_view(line).substr(0, comma)),
                           parse_double(std::string_view(line).substr(comma + 1))});
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("read_point_set_csv: malformed row '" + line + "'");
        }
    }
    return out;
}

}  // namespace tailkit
