#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heatsmc/config.hpp"
#include "heatsmc/heat_sim.hpp"
#include "heatsmc/reduced_ode.hpp"
#include "heatsmc/trajectory.hpp"

namespace heatsmc {

/// Reaching band and dwell used for t_reach detection on the full PDE loop.
/// Looser than the reduced oracle's machine zero because sigma carries
/// O(dx^2) quadrature error; artifact thresholds, not claims from the
/// underlying analysis.
inline constexpr double kReachBand = 1e-3;
inline constexpr double kReachDwell = 0.05;
/// The decay fit starts this long after t_reach to exclude mode mixing.
inline constexpr double kDecayFitDelay = 0.2;

struct Metrics {
  bool gains_valid = false;
  bool reached = false;
  std::optional<double> t_reach;
  std::optional<double> reach_bound;            // SMC only
  std::optional<double> post_reach_sigma_sup;
  std::optional<double> decay_rate;             // fitted, 1/s
  double chattering_index = 0.0;                // total variation of u per second
};

struct ExperimentRecord {
  SimConfig config;
  TrajectoryRecord trajectory;
  Metrics metrics;
};

/// Least-squares slope of -log(norm) over [begin, end). Throws on windows
/// shorter than 10 samples or non-positive norms.
double fit_decay_rate(std::span<const double> t, std::span<const double> norms, std::size_t begin,
                      std::size_t end);

/// Total variation of u over [begin, end) divided by the window length.
double chattering_index(std::span<const double> u, double dt, std::size_t begin, std::size_t end);

/// Metrics derived from the recorded series alone (plus config constants),
/// so they can be recomputed bit-exactly from an exported trajectory.csv.
Metrics compute_metrics(const SimConfig& config, const TrajectoryRecord& traj);

/// Closed-loop run with metrics attached. Deterministic given the config.
ExperimentRecord run_experiment(const SimConfig& config);

/// Writes trajectory.csv, metrics.csv and (when snapshots exist) field.csv
/// under out_dir. Doubles are printed with round-trip precision, so outputs
/// are byte-stable across runs.
void export_record(const ExperimentRecord& record, const std::filesystem::path& out_dir);

/// Round-trip decimal formatting shared by all CSV writers.
std::string csv_double(double v);

struct SweepRow {
  std::vector<std::string> values;  ///< one per swept key, in key order
  Metrics metrics;
  std::string status;               ///< "ok" or the recorded failure
};

struct SweepTable {
  std::vector<std::string> keys;
  std::vector<SweepRow> rows;
};

/// Cartesian product over the `sweep.<key> = v1,v2,...` entries of `base`;
/// rows are produced in grid order and per-row failures are recorded
/// without aborting the sweep.
SweepTable sweep(const Config& base);

void export_sweep(const SweepTable& table, const std::filesystem::path& out_path);

}  // namespace heatsmc
