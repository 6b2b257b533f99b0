#include "boundcal/losses.hpp"

#include <cmath>
#include <string>

namespace boundcal {

namespace {

void check_pinball_args(double q_hat, double y, double a) {
  if (!std::isfinite(q_hat) || !std::isfinite(y))
    raise(Errc::NonFiniteValue, "pinball inputs must be finite");
  if (!(a > 0.0 && a < 1.0))
    raise(Errc::QuantileOutOfRange, "quantile level must lie in (0,1), got " + std::to_string(a));
}

}  // namespace

double pinball(double q_hat, double y, double a) {
  check_pinball_args(q_hat, y, a);
  if (y > q_hat) return (y - q_hat) * a;
  return (q_hat - y) * (1.0 - a);
}

double pinball_subgrad(double q_hat, double y, double a) {
  check_pinball_args(q_hat, y, a);
  if (y > q_hat) return -a;
  if (y < q_hat) return 1.0 - a;
  return 0.0;
}

double qr_loss(double lo, double hi, double y, const RiskConfig& cfg) {
  cfg.validate();
  return pinball(lo, y, cfg.q_lo) + pinball(hi, y, cfg.q_hi);
}

LossBreakdown interval_regression_loss(double lo, double point, double hi, double y,
                                       const RiskConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(point)) raise(Errc::NonFiniteValue, "point prediction must be finite");
  LossBreakdown out;
  out.pinball_lo = pinball(lo, y, cfg.q_lo);
  out.pinball_hi = pinball(hi, y, cfg.q_hi);
  out.mse_point = (point - y) * (point - y);
  out.total = out.pinball_lo + out.pinball_hi + out.mse_point;
  return out;
}

double bound_match_loss(double pred_lo, double pred_hi, double target_lo, double target_hi) {
  if (!std::isfinite(pred_lo) || !std::isfinite(pred_hi) || !std::isfinite(target_lo) ||
      !std::isfinite(target_hi))
    raise(Errc::NonFiniteValue, "bound match inputs must be finite");
  const double dl = pred_lo - target_lo;
  const double dh = pred_hi - target_hi;
  return dl * dl + dh * dh;
}

}  // namespace boundcal
