#ifndef BOUNDCAL_LOSSES_HPP
#define BOUNDCAL_LOSSES_HPP

#include "boundcal/core_types.hpp"

namespace boundcal {

struct LossBreakdown {
  double pinball_lo = 0.0;
  double pinball_hi = 0.0;
  double mse_point = 0.0;
  double total = 0.0;
};

// Asymmetric quantile loss: (y - q_hat) * a when y > q_hat, else
// (q_hat - y) * (1 - a). Minimized when q_hat is the a-quantile of y.
double pinball(double q_hat, double y, double a);

// Subgradient of pinball in q_hat; 0 at the kink.
double pinball_subgrad(double q_hat, double y, double a);

// pinball(lo, y, cfg.q_lo) + pinball(hi, y, cfg.q_hi).
double qr_loss(double lo, double hi, double y, const RiskConfig& cfg);

// Quantile pair loss plus squared pointwise error.
LossBreakdown interval_regression_loss(double lo, double point, double hi, double y,
                                       const RiskConfig& cfg);

// Squared distance to a precomputed target bound pair.
double bound_match_loss(double pred_lo, double pred_hi, double target_lo, double target_hi);

}  // namespace boundcal

#endif
