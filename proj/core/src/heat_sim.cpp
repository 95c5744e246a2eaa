#include "heatsmc/heat_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heatsmc {

void SimConfig::validate() const {
  if (grid.n_nodes < 3) {
    throw std::invalid_argument("SimConfig: n_nodes must be at least 3");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("SimConfig: dt must be positive");
  }
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("SimConfig: horizon must be positive");
  }
  if (!(c0 >= 0.0)) {
    throw std::invalid_argument("SimConfig: c0 must be non-negative");
  }
  const double dx = grid.dx();
  if (integrator == Integrator::explicit_euler && dt > 0.5 * dx * dx) {
    throw std::invalid_argument("SimConfig: explicit scheme requires dt <= dx^2/2, got dt=" +
                                std::to_string(dt) + " dx=" + std::to_string(dx));
  }
  if (!z0_table.empty() && z0_table.size() != static_cast<std::size_t>(grid.n_nodes)) {
    throw std::invalid_argument("SimConfig: z0_table length does not match grid");
  }
  if (snapshot_stride < 1) {
    throw std::invalid_argument("SimConfig: snapshot_stride must be at least 1");
  }
}

FieldState build_initial_state(const SimConfig& config) {
  FieldState state;
  state.t = 0.0;
  state.values.resize(config.grid.n_nodes);
  if (!config.z0_table.empty()) {
    state.values = config.z0_table;
    return state;
  }
  for (int i = 0; i < config.grid.n_nodes; ++i) {
    const double x = config.grid.x(i);
    double acc = 0.0;
    for (auto it = config.z0_poly.rbegin(); it != config.z0_poly.rend(); ++it) {
      acc = acc * x + *it;  // Horner
    }
    state.values[i] = acc;
  }
  return state;
}

namespace {

// Semi-discrete right-hand side dz/dt = A_h z + boundary forcing.
void apply_rhs(const std::vector<double>& z, double dx, double c0, double flux,
               std::vector<double>& out) {
  const std::size_t n = z.size();
  const double inv_dx2 = 1.0 / (dx * dx);
  const double robin_scale = 1.0 / (1.0 + c0 * dx / 3.0);
  out[0] = (2.0 * z[1] - 2.0 * z[0] - 2.0 * dx * c0 * z[0]) * inv_dx2 * robin_scale;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (z[i + 1] - 2.0 * z[i] + z[i - 1]) * inv_dx2;
  }
  out[n - 1] = (2.0 * z[n - 2] - 2.0 * z[n - 1] + 2.0 * dx * flux) * inv_dx2;
}

// Backward Euler: solve (I - dt A_h) z+ = z + dt * forcing by the Thomas algorithm.
void implicit_step(std::vector<double>& z, double dx, double dt, double c0, double flux) {
  const std::size_t n = z.size();
  const double inv_dx2 = 1.0 / (dx * dx);
  const double robin_scale = 1.0 / (1.0 + c0 * dx / 3.0);

  std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(z);
  diag[0] = 1.0 + dt * (2.0 + 2.0 * dx * c0) * inv_dx2 * robin_scale;
  upper[0] = -dt * 2.0 * inv_dx2 * robin_scale;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    lower[i] = -dt * inv_dx2;
    diag[i] = 1.0 + 2.0 * dt * inv_dx2;
    upper[i] = -dt * inv_dx2;
  }
  lower[n - 1] = -dt * 2.0 * inv_dx2;
  diag[n - 1] = 1.0 + dt * 2.0 * inv_dx2;
  rhs[n - 1] += dt * 2.0 * flux / dx;

  for (std::size_t i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  z[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    z[i] = (rhs[i] - upper[i] * z[i + 1]) / diag[i];
  }
}

}  // namespace

FieldState step(const FieldState& state, double u, double d, const SimConfig& config) {
  const double dx = config.grid.dx();
  const double flux = u + d;

  FieldState next;
  next.t = state.t + config.dt;
  next.values = state.values;

  if (config.integrator == Integrator::explicit_euler) {
    std::vector<double> rhs(state.values.size());
    apply_rhs(state.values, dx, config.c0, flux, rhs);
    for (std::size_t i = 0; i < next.values.size(); ++i) {
      next.values[i] += config.dt * rhs[i];
    }
  } else {
    implicit_step(next.values, dx, config.dt, config.c0, flux);
  }

  for (double v : next.values) {
    if (!std::isfinite(v)) {
      throw std::runtime_error("heat_sim: state blew up at t=" + std::to_string(next.t));
    }
  }
  return next;
}

TrajectoryRecord simulate(const SimConfig& config) {
  config.validate();

  const Eigenpair pair = solve_eigenvalue(config.c0, config.branch);
  const SampledFunction phi = sample_eigenfunction(pair, config.grid);

  if (config.law == ControlLaw::smc) {
    if (!validate_smc_gains(config.smc, config.disturbance, pair.b_star_phi).pass) {
      throw std::invalid_argument("simulate: SMC gain condition K > K_d |B*phi| fails");
    }
  } else if (config.law == ControlLaw::super_twisting) {
    if (!validate_st_gains(config.st, config.disturbance, pair.b_star_phi).pass) {
      throw std::invalid_argument("simulate: super-twisting gain conditions fail");
    }
  }

  const auto n_steps = static_cast<std::size_t>(std::llround(config.horizon / config.dt));

  TrajectoryRecord rec;
  rec.grid = config.grid;
  rec.t.reserve(n_steps + 1);
  rec.sigma.reserve(n_steps + 1);
  rec.u.reserve(n_steps + 1);
  rec.aux.reserve(n_steps + 1);
  rec.norm_z.reserve(n_steps + 1);

  FieldState state = build_initial_state(config);
  StState st_state{config.v0};
  SampledFunction z_view{config.grid, state.values};

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * config.dt;
    z_view.values = state.values;
    const double sigma = inner_product(phi, z_view);

    double u = 0.0;
    double aux = 0.0;
    double selection = 0.0;
    switch (config.law) {
      case ControlLaw::none:
        break;
      case ControlLaw::smc:
        selection = config.selection == SignSelection::implicit_projection
                        ? sign_step(sigma, 0.0, config.smc.k, config.dt).selection
                        : sign_explicit(sigma);
        u = smc_control(sigma, pair, config.smc, selection);
        aux = selection;
        break;
      case ControlLaw::super_twisting:
        selection = sign_explicit(sigma);
        u = st_control(sigma, st_state, pair, config.st, selection);
        aux = st_state.v;
        break;
    }

    rec.t.push_back(t);
    rec.sigma.push_back(sigma);
    rec.u.push_back(u);
    rec.aux.push_back(aux);
    rec.norm_z.push_back(l2_norm(z_view));
    if (config.snapshots && k % static_cast<std::size_t>(config.snapshot_stride) == 0) {
      rec.snapshots.push_back({t, state.values});
    }

    if (k == n_steps) break;

    state = step(state, u, config.disturbance.value(t), config);
    if (config.law == ControlLaw::super_twisting) {
      st_state = st_integrator_step(st_state, selection, config.st, config.dt);
    }
  }
  return rec;
}

}  // namespace heatsmc
