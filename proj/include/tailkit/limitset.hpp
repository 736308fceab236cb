#pragma once

#include <cstddef>

#include "tailkit/dists.hpp"
#include "tailkit/qqsets.hpp"

namespace tailkit {

/// Limit of the full-sample log QQ set when the tail carries a known slowly
/// varying factor L:
///
///   {(alpha s, s + log L(F^{<-}(1 - e^{-alpha s})) / alpha) : 0 < s <= M}
///
/// sampled at `samples` evenly spaced parameter values. Only ParetoLog has a
/// known non-trivial L; passing the plain Pareto model (L = 1, the ray
/// y = x/alpha) requires allow_pure_pareto. Other models throw
/// std::invalid_argument.
PointSet limitset_curve(const DistributionModel& model, double M, std::size_t samples = 1000,
                        bool allow_pure_pareto = false);

}  // namespace tailkit
