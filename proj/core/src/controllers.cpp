#include "heatsmc/controllers.hpp"

#include <cmath>
#include <stdexcept>

namespace heatsmc {

SmcGainCheck validate_smc_gains(const SmcGains& gains, const DisturbanceSpec& d, double b_star_phi) {
  if (b_star_phi == 0.0) {
    throw std::invalid_argument("validate_smc_gains: b_star_phi is zero");
  }
  SmcGainCheck check;
  check.margin = gains.k - d.k_d * std::fabs(b_star_phi);
  check.pass = gains.k > 0.0 && check.margin > 0.0;
  return check;
}

StGainCheck validate_st_gains(const StGains& gains, const DisturbanceSpec& d, double b_star_phi) {
  if (b_star_phi == 0.0) {
    throw std::invalid_argument("validate_st_gains: b_star_phi is zero");
  }
  if (!d.c.has_value()) {
    throw std::invalid_argument(
        "validate_st_gains: disturbance has no certified derivative bound C");
  }
  const double bc = std::fabs(b_star_phi) * *d.c;
  StGainCheck check;
  check.beta_margin = gains.beta - bc;
  check.alpha_margin = gains.alpha - std::sqrt(gains.beta + bc);
  check.pass = gains.alpha > 0.0 && gains.beta > 0.0 && check.beta_margin > 0.0 &&
               check.alpha_margin > 0.0;
  return check;
}

SignStepResult sign_step(double sigma, double drift, double gain, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("sign_step: dt must be positive");
  }
  const double sigma_hat = sigma + dt * drift;
  SignStepResult out;
  if (std::fabs(sigma_hat) > dt * gain) {
    out.selection = sigma_hat > 0.0 ? 1.0 : -1.0;
    out.sigma_next = sigma_hat - dt * gain * out.selection;
  } else {
    out.selection = sigma_hat / (dt * gain);
    out.sigma_next = 0.0;
  }
  return out;
}

double sign_explicit(double sigma) {
  if (sigma > 0.0) return 1.0;
  if (sigma < 0.0) return -1.0;
  return 0.0;
}

double smc_control(double sigma, const Eigenpair& pair, const SmcGains& gains, double selection,
                   double feedforward) {
  return feedforward - (pair.lambda * sigma + gains.k * selection) / pair.b_star_phi;
}

double st_control(double sigma, const StState& state, const Eigenpair& pair, const StGains& gains,
                  double selection, double feedforward) {
  const double sq = std::sqrt(std::fabs(sigma));
  return feedforward +
         (-pair.lambda * sigma - gains.alpha * sq * selection + state.v) / pair.b_star_phi;
}

StState st_integrator_step(const StState& state, double selection, const StGains& gains, double dt) {
  if (std::fabs(selection) > 1.0) {
    throw std::invalid_argument("st_integrator_step: |selection| must not exceed 1");
  }
  return StState{state.v - dt * gains.beta * selection};
}

}  // namespace heatsmc
