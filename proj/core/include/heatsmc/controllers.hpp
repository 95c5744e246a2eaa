#pragma once

#include "heatsmc/disturbance.hpp"
#include "heatsmc/spectral.hpp"

namespace heatsmc {

/// Switching gain of the first-order sliding-mode law.
struct SmcGains {
  double k = 0.0;
};

/// Super-twisting gains.
struct StGains {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Integrator state of the super-twisting controller, dv/dt in -beta*sign(sigma).
struct StState {
  double v = 0.0;
};

struct SmcGainCheck {
  bool pass = false;
  double margin = 0.0;  ///< k - k_d * |B*phi|, the guaranteed reaching rate.
};

struct StGainCheck {
  bool pass = false;
  double beta_margin = 0.0;   ///< beta - |B*phi| * C
  double alpha_margin = 0.0;  ///< alpha - sqrt(beta + |B*phi| * C)
};

/// Reaching condition K > K_d |B*phi|. Throws std::invalid_argument when
/// b_star_phi == 0 (the controller is undefined there).
SmcGainCheck validate_smc_gains(const SmcGains& gains, const DisturbanceSpec& d, double b_star_phi);

/// Super-twisting conditions beta > |B*phi| C and alpha > sqrt(beta + |B*phi| C).
/// Throws std::invalid_argument when the disturbance carries no certified
/// derivative bound or b_star_phi == 0.
StGainCheck validate_st_gains(const StGains& gains, const DisturbanceSpec& d, double b_star_phi);

/// Result of one implicit (projection) step of sigma' in drift - gain*sign(sigma).
struct SignStepResult {
  double selection = 0.0;   ///< s in [-1,1]
  double sigma_next = 0.0;
};

/// Implicit discretization of the set-valued sign: predict the unforced step
/// sigma_hat = sigma + dt*drift; if |sigma_hat| > dt*gain, saturate and move
/// toward the surface, otherwise select s = sigma_hat/(dt*gain) and land
/// exactly on it. Eliminates discretization-induced limit cycles.
SignStepResult sign_step(double sigma, double drift, double gain, double dt);

/// Explicit selection sign(sigma), with sign(0) = 0.
double sign_explicit(double sigma);

/// u = -(lambda*sigma + K*s) / B*phi, with s a sign selection in [-1,1].
/// The feedforward term (the stabilizing operator L) is zero for the heat
/// instance; pass a nonzero `feedforward` to plug one in.
double smc_control(double sigma, const Eigenpair& pair, const SmcGains& gains, double selection,
                   double feedforward = 0.0);

/// u = (-lambda*sigma - alpha*|sigma|^(1/2)*s + v) / B*phi. Continuous in sigma.
double st_control(double sigma, const StState& state, const Eigenpair& pair, const StGains& gains,
                  double selection, double feedforward = 0.0);

/// Explicit Euler step of the integrator inclusion with the chosen selection:
/// v+ = v - dt*beta*s. Requires |s| <= 1.
StState st_integrator_step(const StState& state, double selection, const StGains& gains, double dt);

}  // namespace heatsmc
