#include "boundcal/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boundcal {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::EmptySample: return "EmptySample";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::QuantileOutOfRange: return "QuantileOutOfRange";
    case Errc::BadMagic: return "BadMagic";
    case Errc::UnsupportedDtype: return "UnsupportedDtype";
    case Errc::FortranOrderUnsupported: return "FortranOrderUnsupported";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IoFailure: return "IoFailure";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BadDimension: return "BadDimension";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::DivergedLoss: return "DivergedLoss";
    case Errc::NegativeLambda: return "NegativeLambda";
    case Errc::EmptyRiskList: return "EmptyRiskList";
    case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
    case Errc::CannotControlRisk: return "CannotControlRisk";
    case Errc::EmptyMask: return "EmptyMask";
    case Errc::TooFewPixels: return "TooFewPixels";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

std::size_t Mask::active_count() const {
  std::size_t n = 0;
  for (auto v : data) n += (v != 0);
  return n;
}

RiskConfig RiskConfig::with_alpha(double alpha, double delta) {
  RiskConfig cfg;
  cfg.alpha = alpha;
  cfg.delta = delta;
  cfg.q_lo = alpha / 2.0;
  cfg.q_hi = 1.0 - alpha / 2.0;
  cfg.validate();
  return cfg;
}

void RiskConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    raise(Errc::BadArgument, "alpha must lie in (0,1), got " + std::to_string(alpha));
  if (!(delta > 0.0 && delta < 1.0))
    raise(Errc::BadArgument, "delta must lie in (0,1), got " + std::to_string(delta));
  if (!(q_lo > 0.0 && q_lo < 1.0 && q_hi > 0.0 && q_hi < 1.0 && q_lo < q_hi))
    raise(Errc::BadArgument, "quantiles must satisfy 0 < q_lo < q_hi < 1");
}

ImageTensor validate_image(std::size_t channels, std::size_t height, std::size_t width,
                           std::vector<double> values) {
  if (channels < 1 || height < 1 || width < 1)
    raise(Errc::ShapeMismatch, "all dimensions must be >= 1");
  const std::size_t expected = channels * height * width;
  if (values.size() != expected)
    raise(Errc::ShapeMismatch, "buffer holds " + std::to_string(values.size()) +
                                   " values, shape requires " + std::to_string(expected));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      raise(Errc::ValueOutOfRange,
            "value " + std::to_string(v) + " at index " + std::to_string(i));
  }
  ImageTensor t;
  t.channels = channels;
  t.height = height;
  t.width = width;
  t.data = std::move(values);
  return t;
}

Mask validate_mask(std::size_t height, std::size_t width, const std::vector<double>& values) {
  if (height < 1 || width < 1) raise(Errc::ShapeMismatch, "mask dimensions must be >= 1");
  if (values.size() != height * width)
    raise(Errc::ShapeMismatch, "mask buffer length does not match H*W");
  Mask m;
  m.height = height;
  m.width = width;
  m.data.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) {
      m.data[i] = 0;
    } else if (values[i] == 1.0) {
      m.data[i] = 1;
    } else {
      raise(Errc::ValueOutOfRange,
            "mask value " + std::to_string(values[i]) + " at index " + std::to_string(i) +
                " is not 0 or 1");
    }
  }
  return m;
}

SampleSet make_sample_set(std::vector<ImageTensor> samples) {
  if (samples.empty()) raise(Errc::EmptySample, "sample set needs J >= 1 members");
  for (std::size_t j = 1; j < samples.size(); ++j) {
    if (!samples[j].same_shape(samples[0]))
      raise(Errc::ShapeMismatch, "sample " + std::to_string(j) + " shape differs from sample 0");
  }
  SampleSet sv;
  sv.samples = std::move(samples);
  return sv;
}

BoundPair enforce_bound_order(const ImageTensor& lower, const ImageTensor& upper,
                              std::size_t* swapped_count) {
  if (!lower.same_shape(upper))
    raise(Errc::ShapeMismatch, "lower and upper bound shapes differ");
  BoundPair bp;
  bp.lower = lower;
  bp.upper = upper;
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < lower.data.size(); ++i) {
    if (bp.lower.data[i] > bp.upper.data[i]) {
      std::swap(bp.lower.data[i], bp.upper.data[i]);
      ++swaps;
    }
  }
  if (swapped_count != nullptr) *swapped_count = swaps;
  return bp;
}

}  // namespace boundcal
