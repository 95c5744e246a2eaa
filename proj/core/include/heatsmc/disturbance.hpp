#pragma once

#include <optional>
#include <vector>

namespace heatsmc {

enum class DisturbanceKind { zero, constant, sinusoid, table };

/// Parametric boundary disturbance d(t) together with its certified bounds:
/// k_d is a sup-norm bound |d| <= k_d, c (when present) a derivative bound
/// |d'| <= c. For the parametric kinds the bounds are computed, for tables
/// they are user-certified.
struct DisturbanceSpec {
  DisturbanceKind kind = DisturbanceKind::zero;
  double amplitude = 0.0;
  double omega = 0.0;                 // sinusoid only, rad/s
  std::vector<double> samples;        // table only, uniform spacing
  double sample_dt = 0.0;             // table only
  double k_d = 0.0;
  std::optional<double> c = 0.0;

  static DisturbanceSpec zero();
  static DisturbanceSpec constant(double a);
  static DisturbanceSpec sinusoid(double a, double omega);
  static DisturbanceSpec table(std::vector<double> samples, double sample_dt, double k_d,
                               std::optional<double> c = std::nullopt);

  double value(double t) const;

  /// Analytic derivative d'(t). Throws std::logic_error for table kind
  /// (no certified derivative is available there).
  double derivative(double t) const;
};

}  // namespace heatsmc
