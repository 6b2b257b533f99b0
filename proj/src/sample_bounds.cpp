#include "boundcal/sample_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "boundcal/parallel.hpp"

namespace boundcal {

double quantile_of_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) raise(Errc::EmptySample, "quantile of zero values");
  if (!(q > 0.0 && q < 1.0))
    raise(Errc::QuantileOutOfRange, "q must lie in (0,1), got " + std::to_string(q));
  const std::size_t n = sorted.size();
  const double h = q * static_cast<double>(n - 1);
  const std::size_t k = static_cast<std::size_t>(h);
  if (k >= n - 1) return sorted[n - 1];
  const double frac = h - static_cast<double>(k);
  return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

double empirical_quantile(std::span<const double> values, double q) {
  if (values.empty()) raise(Errc::EmptySample, "quantile of zero values");
  for (double v : values)
    if (!std::isfinite(v)) raise(Errc::NonFiniteValue, "sample values must be finite");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return quantile_of_sorted(sorted, q);
}

BoundPair bounds_from_samples(const SampleSet& sv, const RiskConfig& cfg) {
  if (sv.samples.empty()) raise(Errc::EmptySample, "sample set is empty");
  cfg.validate();
  const ImageTensor& first = sv.samples.front();
  const std::size_t n_pixels = first.size();
  const std::size_t n_samples = sv.count();

  ImageTensor lower = first;
  ImageTensor upper = first;
  // One sorted copy per pixel serves both quantiles. Pixels are processed in
  // chunks; each chunk writes only its own output slots.
  constexpr std::size_t kChunk = 64;
  const std::size_t n_chunks = (n_pixels + kChunk - 1) / kChunk;
  parallel_for(0, n_chunks, [&](std::size_t ci) {
    std::vector<double> column(n_samples);
    const std::size_t begin = ci * kChunk;
    const std::size_t end = std::min(begin + kChunk, n_pixels);
    for (std::size_t px = begin; px < end; ++px) {
      for (std::size_t j = 0; j < n_samples; ++j) column[j] = sv.samples[j].data[px];
      std::sort(column.begin(), column.end());
      lower.data[px] = quantile_of_sorted(column, cfg.q_lo);
      upper.data[px] = quantile_of_sorted(column, cfg.q_hi);
    }
  });
  return enforce_bound_order(lower, upper);
}

}  // namespace boundcal
