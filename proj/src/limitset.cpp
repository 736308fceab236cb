#include "tailkit/limitset.hpp"

#include <cmath>
#include <stdexcept>

namespace tailkit {

PointSet limitset_curve(const DistributionModel& model, double M, std::size_t samples,
                        bool allow_pure_pareto) {
    const bool accepted = model.kind == ModelKind::ParetoLog ||
                          (allow_pure_pareto && model.kind == ModelKind::Pareto);
    if (!accepted) {
        throw std::invalid_argument("limitset_curve: needs a model with known slowly varying factor");
    }
    if (!(M > 0.0) || samples < 1) {
        throw std::invalid_argument("limitset_curve: M must be positive and samples >= 1");
    }
    const double alpha = model.alpha;
    PointSet curve;
    curve.reserve(samples);
    for (std::size_t i = 1; i <= samples; ++i) {
        const double s = M * static_cast<double>(i) / static_cast<double>(samples);
        // 1 - e^{-alpha s} loses everything for tiny s; -expm1 keeps it.
        const double p = -std::expm1(-alpha * s);
        const double log_l = std::log(slowly_varying_factor(model, quantile(model, p)));
        curve.push_back({alpha * s, s + log_l / alpha});
    }
    return curve;
}

}  // namespace tailkit
