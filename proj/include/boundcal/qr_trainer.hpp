#ifndef BOUNDCAL_QR_TRAINER_HPP
#define BOUNDCAL_QR_TRAINER_HPP

#include <cstdint>
#include <vector>

#include "boundcal/core_types.hpp"

namespace boundcal {

// Patch-based bound regressor: k*k*C inputs -> hidden rectifier layer ->
// three scalar heads (lower / point / upper). Predictions are single-channel
// bound maps; the patch may span multiple input channels.
struct QrModel {
  std::size_t patch = 5;     // k, odd
  std::size_t hidden = 32;   // Hd
  std::size_t channels = 1;  // input channels covered by each patch

  std::vector<double> w1;  // hidden x (k*k*channels), row-major
  std::vector<double> b1;  // hidden
  std::vector<double> w_lower, w_point, w_upper;  // hidden each
  double b_lower = 0.0, b_point = 0.0, b_upper = 0.0;

  std::size_t patch_inputs() const { return patch * patch * channels; }
};

enum class TrainMode { kQuantile, kApprox };

struct TrainConfig {
  TrainMode mode = TrainMode::kQuantile;
  double learning_rate = 0.05;
  std::size_t epochs = 30;
  std::size_t batch_pixels = 256;
  std::uint64_t seed = 0;
  double mse_weight = 1.0;
  RiskConfig risk;

  void validate() const;
};

// Gradient buffer shaped like the trainable parameters of a QrModel.
struct ModelGrad {
  std::vector<double> w1, b1;
  std::vector<double> w_lower, w_point, w_upper;
  double b_lower = 0.0, b_point = 0.0, b_upper = 0.0;

  static ModelGrad zeros_like(const QrModel& m);
  void reset();
};

// Flat parameter views; model and grad enumerate in the same order.
std::vector<double*> parameter_view(QrModel& m);
std::vector<const double*> parameter_view(const QrModel& m);
std::vector<double*> parameter_view(ModelGrad& g);

// Weights uniform in [-s, s] with s = sqrt(6 / (k*k*C + Hd)), biases zero.
QrModel init_model(std::size_t patch, std::size_t hidden, std::size_t channels,
                   std::uint64_t seed);

struct HeadOutputs {
  double lower = 0.0, point = 0.0, upper = 0.0;
};

// Raw head outputs at one pixel; patch extraction replicates edges. No
// clamping and no ordering here.
HeadOutputs forward(const QrModel& m, const ImageTensor& x, std::size_t row, std::size_t col);

struct PixelTarget {
  double y = 0.0;              // quantile mode
  double lo = 0.0, hi = 0.0;   // approx mode
};

// Loss at one pixel under cfg.mode, with its analytic gradient accumulated
// into *grad when given. Quantile mode: pinball(lower) + pinball(upper) +
// mse_weight * (point - y)^2. Approx mode: squared errors to the target pair.
double pixel_loss_and_grad(const QrModel& m, const ImageTensor& x, std::size_t row,
                           std::size_t col, const PixelTarget& target, const TrainConfig& cfg,
                           ModelGrad* grad);

struct TrainResult {
  QrModel model;
  std::vector<double> epoch_loss;  // mean minibatch loss per epoch
};

// Minibatch gradient descent; pixels sampled uniformly with replacement from
// all (image, row, col) triples. Deterministic given cfg.seed. Quantile mode
// reads targets_y, approx mode reads target_bounds.
TrainResult train(QrModel model, const std::vector<ImageTensor>& inputs,
                  const std::vector<ImageTensor>& targets_y,
                  const std::vector<BoundPair>& target_bounds, const TrainConfig& cfg);

// Forward at every pixel, clamp to [0,1], order via enforce_bound_order.
// Result is a single-channel (1,H,W) pair.
BoundPair predict_bounds(const QrModel& m, const ImageTensor& x);

}  // namespace boundcal

#endif
