#pragma once

#include <vector>

#include "heatsmc/controllers.hpp"
#include "heatsmc/disturbance.hpp"
#include "heatsmc/grid.hpp"
#include "heatsmc/trajectory.hpp"

namespace heatsmc {

enum class ControlLaw { none, smc, super_twisting };
enum class SignSelection { implicit_projection, explicit_sign };
enum class Integrator { explicit_euler, implicit_euler };

/// Full description of one closed-loop run of
///   z_t = z_xx,  z_x(t,0) = c0 z(t,0),  z_x(t,1) = u(t) + d(t).
struct SimConfig {
  double c0 = 0.5;
  Grid grid{11};
  double dt = 1e-4;
  double horizon = 3.0;

  /// Initial profile as polynomial coefficients, z0(x) = sum_k z0_poly[k] x^k.
  /// Ignored when z0_table is non-empty (nodal values, must match the grid).
  std::vector<double> z0_poly{0.0, 0.0, 0.0, 10.0};
  std::vector<double> z0_table;

  DisturbanceSpec disturbance = DisturbanceSpec::sinusoid(2.0, 1.0);

  ControlLaw law = ControlLaw::smc;
  SmcGains smc{2.5};
  StGains st{2.2, 2.5};
  double v0 = 0.0;
  int branch = 1;
  SignSelection selection = SignSelection::implicit_projection;
  Integrator integrator = Integrator::explicit_euler;

  bool snapshots = false;
  int snapshot_stride = 100;

  /// Rejects n_nodes < 3, non-positive horizon/dt and, for the explicit
  /// integrator, any dt violating the stability bound dt <= dx^2/2.
  /// Throws std::invalid_argument.
  void validate() const;
};

struct FieldState {
  double t = 0.0;
  std::vector<double> values;
};

FieldState build_initial_state(const SimConfig& config);

/// One time step of the second-order central-difference semi-discretization
/// with ghost-node boundary elimination. The Robin row carries the half-cell
/// factor 1/(1 + c0 dx/3), which keeps the nodal truncation error of the
/// boundary row at O(dx^2) (z''' = c0 z'' at x = 0 for every solution).
/// Throws std::runtime_error when the state stops being finite, reporting
/// the offending time.
FieldState step(const FieldState& state, double u, double d, const SimConfig& config);

/// Closed-loop run: validates gains, then iterates sigma measurement,
/// control evaluation and one PDE step per controller period (single-rate
/// loop, controller period == dt). Deterministic given the config.
TrajectoryRecord simulate(const SimConfig& config);

}  // namespace heatsmc
