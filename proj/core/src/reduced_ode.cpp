#include "heatsmc/reduced_ode.hpp"

#include <cmath>
#include <stdexcept>

namespace heatsmc {

namespace {

std::size_t step_count(double horizon, double dt) {
  if (!(dt > 0.0) || !(horizon > 0.0)) {
    throw std::invalid_argument("reduced_ode: dt and horizon must be positive");
  }
  return static_cast<std::size_t>(std::llround(horizon / dt));
}

}  // namespace

ReducedTrajectory simulate_smc_reduced(double sigma0, const SmcGains& gains, double b_star_phi,
                                       const DisturbanceSpec& d, double dt, double horizon) {
  if (!validate_smc_gains(gains, d, b_star_phi).pass) {
    throw std::invalid_argument("simulate_smc_reduced: gain condition fails");
  }
  const std::size_t n = step_count(horizon, dt);

  ReducedTrajectory traj;
  traj.dt = dt;
  traj.t.reserve(n + 1);
  traj.sigma.reserve(n + 1);
  traj.selection.reserve(n + 1);

  double sigma = sigma0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    // The known drift is the disturbance channel; the switching term is
    // handled by the projection, so the surface is reached exactly.
    const auto next = sign_step(sigma, b_star_phi * d.value(t), gains.k, dt);
    traj.t.push_back(t);
    traj.sigma.push_back(sigma);
    traj.selection.push_back(next.selection);
    if (k == n) break;
    sigma = next.sigma_next;
  }
  return traj;
}

ReducedTrajectory simulate_st_reduced(double sigma0, double w0, const StGains& gains,
                                      double b_star_phi, const DisturbanceSpec& d, double dt,
                                      double horizon) {
  if (!validate_st_gains(gains, d, b_star_phi).pass) {
    throw std::invalid_argument("simulate_st_reduced: gain conditions fail");
  }
  const std::size_t n = step_count(horizon, dt);

  ReducedTrajectory traj;
  traj.dt = dt;
  traj.t.reserve(n + 1);
  traj.sigma.reserve(n + 1);
  traj.w.reserve(n + 1);
  traj.selection.reserve(n + 1);

  double sigma = sigma0;
  double w = w0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double s = sign_explicit(sigma);
    traj.t.push_back(t);
    traj.sigma.push_back(sigma);
    traj.w.push_back(w);
    traj.selection.push_back(s);
    if (k == n) break;
    const double sigma_next = sigma + dt * (-gains.alpha * std::sqrt(std::fabs(sigma)) * s + w);
    w += dt * (b_star_phi * d.derivative(t) - gains.beta * s);
    sigma = sigma_next;
  }
  return traj;
}

double reaching_time_bound(double sigma0, const SmcGains& gains, const DisturbanceSpec& d,
                           double b_star_phi) {
  const auto check = validate_smc_gains(gains, d, b_star_phi);
  if (!check.pass) {
    throw std::invalid_argument("reaching_time_bound: non-positive reaching margin");
  }
  return std::fabs(sigma0) / check.margin;
}

std::optional<double> detect_reaching_time(std::span<const double> t,
                                           std::span<const double> sigma,
                                           std::span<const double> w, double band, double dwell) {
  if (!(band > 0.0) || !(dwell > 0.0)) {
    throw std::invalid_argument("detect_reaching_time: band and dwell must be positive");
  }
  if (t.size() != sigma.size() || (!w.empty() && w.size() != sigma.size())) {
    throw std::invalid_argument("detect_reaching_time: series length mismatch");
  }
  if (t.empty()) return std::nullopt;

  // Walk backwards to the first index from which the trajectory never leaves
  // the band again.
  std::size_t first = t.size();
  for (std::size_t j = t.size(); j-- > 0;) {
    const bool inside = std::fabs(sigma[j]) <= band && (w.empty() || std::fabs(w[j]) <= band);
    if (!inside) break;
    first = j;
  }
  if (first == t.size()) return std::nullopt;
  if (t.back() - t[first] < dwell) return std::nullopt;
  return t[first];
}

std::optional<double> detect_reaching_time(const ReducedTrajectory& traj, double band,
                                           double dwell) {
  return detect_reaching_time(traj.t, traj.sigma, traj.w, band, dwell);
}

}  // namespace heatsmc
