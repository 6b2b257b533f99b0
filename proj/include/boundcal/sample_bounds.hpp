#ifndef BOUNDCAL_SAMPLE_BOUNDS_HPP
#define BOUNDCAL_SAMPLE_BOUNDS_HPP

#include <span>

#include "boundcal/core_types.hpp"

namespace boundcal {

// Linear interpolation between order statistics at position q * (J - 1)
// ("type 7"). Input order does not matter.
double empirical_quantile(std::span<const double> values, double q);

// Same rule evaluated on values already sorted ascending, without copying.
double quantile_of_sorted(std::span<const double> sorted, double q);

// Per-pixel empirical quantiles over the sample stack: lower at cfg.q_lo,
// upper at cfg.q_hi, passed through enforce_bound_order.
BoundPair bounds_from_samples(const SampleSet& sv, const RiskConfig& cfg);

}  // namespace boundcal

#endif
