#include "heatsmc/disturbance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace heatsmc {

DisturbanceSpec DisturbanceSpec::zero() { return DisturbanceSpec{}; }

DisturbanceSpec DisturbanceSpec::constant(double a) {
  DisturbanceSpec d;
  d.kind = DisturbanceKind::constant;
  d.amplitude = a;
  d.k_d = std::fabs(a);
  d.c = 0.0;
  return d;
}

DisturbanceSpec DisturbanceSpec::sinusoid(double a, double omega) {
  DisturbanceSpec d;
  d.kind = DisturbanceKind::sinusoid;
  d.amplitude = a;
  d.omega = omega;
  d.k_d = std::fabs(a);
  d.c = std::fabs(a * omega);
  return d;
}

DisturbanceSpec DisturbanceSpec::table(std::vector<double> samples, double sample_dt, double k_d,
                                       std::optional<double> c) {
  if (samples.empty() || !(sample_dt > 0.0)) {
    throw std::invalid_argument("DisturbanceSpec::table: empty table or bad spacing");
  }
  DisturbanceSpec d;
  d.kind = DisturbanceKind::table;
  d.samples = std::move(samples);
  d.sample_dt = sample_dt;
  d.k_d = k_d;
  d.c = c;
  return d;
}

double DisturbanceSpec::value(double t) const {
  switch (kind) {
    case DisturbanceKind::zero:
      return 0.0;
    case DisturbanceKind::constant:
      return amplitude;
    case DisturbanceKind::sinusoid:
      return amplitude * std::sin(omega * t);
    case DisturbanceKind::table: {
      // Linear interpolation, held constant beyond the last sample.
      const double pos = t / sample_dt;
      if (pos <= 0.0) return samples.front();
      const auto i = static_cast<std::size_t>(pos);
      if (i + 1 >= samples.size()) return samples.back();
      const double frac = pos - static_cast<double>(i);
      return samples[i] + frac * (samples[i + 1] - samples[i]);
    }
  }
  return 0.0;
}

double DisturbanceSpec::derivative(double t) const {
  switch (kind) {
    case DisturbanceKind::zero:
    case DisturbanceKind::constant:
      return 0.0;
    case DisturbanceKind::sinusoid:
      return amplitude * omega * std::cos(omega * t);
    case DisturbanceKind::table:
      throw std::logic_error("DisturbanceSpec::derivative: table kind has no analytic derivative");
  }
  return 0.0;
}

}  // namespace heatsmc
