#ifndef BOUNDCAL_CORE_TYPES_HPP
#define BOUNDCAL_CORE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boundcal/error.hpp"

namespace boundcal {

// A (C,H,W) stack of pixel intensities in [0,1], row-major with C outermost
// and W innermost. Instances built through validate_image are immutable by
// convention and safe to share across workers.
struct ImageTensor {
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> data;

  std::size_t size() const { return channels * height * width; }
  std::size_t plane() const { return height * width; }

  double at(std::size_t c, std::size_t h, std::size_t w) const {
    return data[(c * height + h) * width + w];
  }
  double& at(std::size_t c, std::size_t h, std::size_t w) {
    return data[(c * height + h) * width + w];
  }

  bool same_shape(const ImageTensor& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }
};

// J sampled variations of one input, all sharing (C,H,W).
struct SampleSet {
  std::vector<ImageTensor> samples;

  std::size_t count() const { return samples.size(); }
};

// Elementwise lower <= upper everywhere; construct through enforce_bound_order
// or from tensors already known to be ordered.
struct BoundPair {
  ImageTensor lower;
  ImageTensor upper;
};

// Binary (H,W) evaluation mask; 1 = evaluate this pixel, 0 = context.
// Applies across every channel of the paired tensors.
struct Mask {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint8_t> data;

  std::size_t size() const { return height * width; }
  bool active(std::size_t h, std::size_t w) const { return data[h * width + w] != 0; }
  std::size_t active_count() const;
};

struct RiskConfig {
  double alpha = 0.1;
  double delta = 0.1;
  double q_lo = 0.05;
  double q_hi = 0.95;

  static RiskConfig with_alpha(double alpha, double delta);
  void validate() const;
};

// Validates shape/value contracts and returns the tensor; never clamps.
// Reports the first offending index on ValueOutOfRange.
ImageTensor validate_image(std::size_t channels, std::size_t height, std::size_t width,
                           std::vector<double> values);

Mask validate_mask(std::size_t height, std::size_t width, const std::vector<double>& values);

SampleSet make_sample_set(std::vector<ImageTensor> samples);

// Per-pixel (min, max) of the two inputs. swapped_count, when given, receives
// the number of pixels where the inputs arrived crossed.
BoundPair enforce_bound_order(const ImageTensor& lower, const ImageTensor& upper,
                              std::size_t* swapped_count = nullptr);

}  // namespace boundcal

#endif
