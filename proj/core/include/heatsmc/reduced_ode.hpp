#pragma once

#include <optional>
#include <span>
#include <vector>

#include "heatsmc/controllers.hpp"
#include "heatsmc/disturbance.hpp"

namespace heatsmc {

/// Scalar Filippov trajectory of the reduced sliding dynamics. For the
/// super-twisting law `w` holds the transformed state w = B*phi d + v;
/// it stays empty for plain SMC.
struct ReducedTrajectory {
  double dt = 0.0;
  std::vector<double> t;
  std::vector<double> sigma;
  std::vector<double> w;
  std::vector<double> selection;
};

/// Integrates sigma' in B*phi d(t) - K sign(sigma) with the implicit
/// projection step: after the first projection to zero, sigma stays exactly
/// zero as long as |d| <= K/|B*phi|. Gains are validated first.
ReducedTrajectory simulate_smc_reduced(double sigma0, const SmcGains& gains, double b_star_phi,
                                       const DisturbanceSpec& d, double dt, double horizon);

/// Integrates the super-twisting reduced system
///   sigma' = -alpha |sigma|^(1/2) sign(sigma) + w
///   w'    in B*phi d'(t) - beta sign(sigma)
/// with explicit Euler; the sigma equation is continuous, so no selection is
/// needed off the surface and sign(0) = 0 keeps the equilibrium exactly.
ReducedTrajectory simulate_st_reduced(double sigma0, double w0, const StGains& gains,
                                      double b_star_phi, const DisturbanceSpec& d, double dt,
                                      double horizon);

/// Worst-case reaching time |sigma0| / (K - K_d |B*phi|).
/// Throws std::invalid_argument when the margin is not positive.
double reaching_time_bound(double sigma0, const SmcGains& gains, const DisturbanceSpec& d,
                           double b_star_phi);

/// First time after which |sigma| (and |w| when given) stays within `band`
/// through the end of the series, provided at least `dwell` seconds remain.
/// Returns nullopt when the trajectory never settles.
std::optional<double> detect_reaching_time(std::span<const double> t,
                                           std::span<const double> sigma,
                                           std::span<const double> w, double band, double dwell);

std::optional<double> detect_reaching_time(const ReducedTrajectory& traj, double band,
                                           double dwell);

}  // namespace heatsmc
