#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tailkit/rng.hpp"

namespace tailkit {

enum class ModelKind { Uniform01, Exponential, Pareto, ParetoLog };

/// A univariate law with a closed-form or numerically inverted quantile.
///
/// alpha is the rate for Exponential and the tail index for Pareto and
/// ParetoLog; it is ignored for Uniform01. ParetoLog has survival function
/// x^-alpha / log(e x) on [1, inf), i.e. a Pareto tail times the slowly
/// varying factor L(x) = 1 / log(e x).
struct DistributionModel {
    ModelKind kind = ModelKind::Uniform01;
    double alpha = 1.0;

    static DistributionModel uniform01();
    static DistributionModel exponential(double rate);
    static DistributionModel pareto(double alpha);
    static DistributionModel pareto_log(double alpha);

    friend bool operator==(const DistributionModel&, const DistributionModel&) = default;
};

/// Throws std::invalid_argument on an unknown name.
ModelKind parse_model_kind(std::string_view name);
std::string_view to_string(ModelKind kind);

/// Validating constructor; alpha must be positive and finite unless kind is
/// Uniform01.
DistributionModel make_model(ModelKind kind, double alpha);

bool uses_alpha(ModelKind kind);

double cdf(const DistributionModel& model, double x);
double survival(const DistributionModel& model, double x);

/// Generalized inverse inf{x : F(x) >= p}.
///
/// Requires 0 < p < 1; Uniform01 additionally accepts p = 1. Anything else
/// throws std::domain_error so that quantile coordinates stay finite.
double quantile(const DistributionModel& model, double p);

/// Left end of the support: 0 for Uniform01 and Exponential, 1 for the
/// Pareto families.
double support_lower(const DistributionModel& model);

/// The slowly varying factor L in survival(x) = x^-alpha L(x). Defined for
/// the Pareto families only (L = 1 for Pareto); x must be >= 1.
double slowly_varying_factor(const DistributionModel& model, double x);

/// Inverse-transform sampling: n draws of quantile(model, U) with U taken
/// from the source in order.
template <UniformSource Source>
std::vector<double> sample(const DistributionModel& model, std::size_t n, Source& source) {
    if (n == 0) {
        throw std::domain_error("sample: n must be at least 1");
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(quantile(model, source.uniform01()));
    }
    return out;
}

}  // namespace tailkit
