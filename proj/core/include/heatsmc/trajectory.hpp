#pragma once

#include <vector>

#include "heatsmc/grid.hpp"

namespace heatsmc {

/// Closed-loop time series: per step t, sliding variable sigma, control u,
/// auxiliary controller value (sign selection for SMC, integrator v for the
/// super-twisting law) and the trapezoid L2 norm of the field. Field
/// snapshots are kept at a configurable stride.
struct TrajectoryRecord {
  Grid grid;
  std::vector<double> t;
  std::vector<double> sigma;
  std::vector<double> u;
  std::vector<double> aux;
  std::vector<double> norm_z;

  struct Snapshot {
    double t = 0.0;
    std::vector<double> values;
  };
  std::vector<Snapshot> snapshots;
};

}  // namespace heatsmc
