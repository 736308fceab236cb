#include "tailkit/dists.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tailkit {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        std::ostringstream msg;
        msg << "alpha must be positive and finite, got " << alpha;
        throw std::invalid_argument(msg.str());
    }
}

[[noreturn]] void reject_probability(const DistributionModel& model, double p) {
    std::ostringstream msg;
    msg << "quantile: probability " << p << " outside the admissible range for "
        << to_string(model.kind);
    throw std::domain_error(msg.str());
}

// Solves alpha*t + log(1+t) = target for t = log x >= 0 by bisection. The
// left side is strictly increasing with value 0 at t = 0.
double pareto_log_inverse(double alpha, double target) {
    constexpr int kMaxIterations = 200;
    constexpr double kTolerance = 1e-12;  // absolute in log x == relative in x

    auto h = [alpha](double t) { return alpha * t + std::log1p(t); };

    double lo = 0.0;
    double hi = std::log(1e9);
    while (h(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 700.0) {
            throw std::domain_error("quantile: ParetoLog inversion overflows double range");
        }
    }
    for (int i = 0; i < kMaxIterations && hi - lo > kTolerance * std::max(1.0, lo); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::exp(0.5 * (lo + hi));
}

}  // namespace

DistributionModel DistributionModel::uniform01() { return {ModelKind::Uniform01, 1.0}; }

DistributionModel DistributionModel::exponential(double rate) {
    return make_model(ModelKind::Exponential, rate);
}

DistributionModel DistributionModel::pareto(double alpha) {
    return make_model(ModelKind::Pareto, alpha);
}

DistributionModel DistributionModel::pareto_log(double alpha) {
    return make_model(ModelKind::ParetoLog, alpha);
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "uniform" || name == "uniform01") return ModelKind::Uniform01;
    if (name == "exponential" || name == "exp") return ModelKind::Exponential;
    if (name == "pareto") return ModelKind::Pareto;
    if (name == "paretolog" || name == "pareto_log" || name == "pareto-log") return ModelKind::ParetoLog;
    throw std::invalid_argument("unknown model kind '" + std::string(name) + "'");
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Uniform01: return "uniform";
        case ModelKind::Exponential: return "exponential";
        case ModelKind::Pareto: return "pareto";
        case ModelKind::ParetoLog: return "paretolog";
    }
    return "unknown";
}

bool uses_alpha(ModelKind kind) { return kind != ModelKind::Uniform01; }

DistributionModel make_model(ModelKind kind, double alpha) {
    if (uses_alpha(kind)) {
        require_alpha(alpha);
    }
    return {kind, alpha};
}

double survival(const DistributionModel& model, double x) {
    switch (model.kind) {
        case ModelKind::Uniform01:
            if (x <= 0.0) return 1.0;
            if (x >= 1.0) return 0.0;
            return 1.0 - x;
        case ModelKind::Exponential:
            if (x <= 0.0) return 1.0;
            return std::exp(-model.alpha * x);
        case ModelKind::Pareto:
            if (x <= 1.0) return 1.0;
            return std::pow(x, -model.alpha);
        case ModelKind::ParetoLog: {
            if (x <= 1.0) return 1.0;
            const double t = std::log(x);
            return std::exp(-model.alpha * t) / (1.0 + t);
        }
    }
    return 0.0;
}

double cdf(const DistributionModel& model, double x) {
    switch (model.kind) {
        case ModelKind::Uniform01:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return x;
        case ModelKind::Exponential:
            if (x <= 0.0) return 0.0;
            return -std::expm1(-model.alpha * x);
        case ModelKind::Pareto:
        case ModelKind::ParetoLog:
            return 1.0 - survival(model, x);
    }
    return 0.0;
}

double quantile(const DistributionModel& model, double p) {
    if (std::isnan(p) || !(p > 0.0)) {
        reject_probability(model, p);
    }
    if (model.kind == ModelKind::Uniform01) {
        if (p > 1.0) reject_probability(model, p);
        return p;
    }
    if (!(p < 1.0)) {
        reject_probability(model, p);
    }
    switch (model.kind) {
        case ModelKind::Exponential:
            return -std::log1p(-p) / model.alpha;
        case ModelKind::Pareto:
            return std::pow(1.0 - p, -1.0 / model.alpha);
        case ModelKind::ParetoLog:
            return pareto_log_inverse(model.alpha, -std::log1p(-p));
        case ModelKind::Uniform01:
            break;
    }
    return p;
}

double support_lower(const DistributionModel& model) {
    switch (model.kind) {
        case ModelKind::Uniform01:
        case ModelKind::Exponential:
            return 0.0;
        case ModelKind::Pareto:
        case ModelKind::ParetoLog:
            return 1.0;
    }
    return 0.0;
}

double slowly_varying_factor(const DistributionModel& model, double x) {
    if (!(x >= 1.0)) {
        throw std::domain_error("slowly_varying_factor: x must be >= 1");
    }
    switch (model.kind) {
        case ModelKind::Pareto:
            return 1.0;
        case ModelKind::ParetoLog:
            return 1.0 / (1.0 + std::log(x));
        default:
            throw std::domain_error("slowly_varying_factor: model has no regularly varying tail");
    }
}

}  // namespace tailkit
