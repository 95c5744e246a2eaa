// Command-line front end: eigenproblem queries, gain validation, closed-loop
// runs, reduced-order oracle runs and parameter sweeps. Every subcommand
// returns a nonzero exit code when a validity gate (config, gains,
// simulation health) fails.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heatsmc/config.hpp"
#include "heatsmc/harness.hpp"
#include "heatsmc/heat_sim.hpp"
#include "heatsmc/reduced_ode.hpp"
#include "heatsmc/spectral.hpp"

namespace {

heatsmc::Config load_config(const std::string& path, const std::vector<std::string>& overrides) {
  heatsmc::Config cfg;
  if (!path.empty()) cfg = heatsmc::Config::parse_file(path);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("override must be key=value: " + kv);
    }
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

int run_eigen(double c0, int branch) {
  const auto pair = heatsmc::solve_eigenvalue(c0, branch);
  const double residual = std::fabs(pair.r * std::tan(pair.r) - c0);
  std::cout << "r,lambda,b_star_phi,residual\n";
  std::cout << heatsmc::csv_double(pair.r) << ',' << heatsmc::csv_double(pair.lambda) << ','
            << heatsmc::csv_double(pair.b_star_phi) << ',' << heatsmc::csv_double(residual)
            << '\n';
  return 0;
}

int run_validate_gains(const heatsmc::Config& cfg) {
  const auto sim = cfg.to_sim_config();
  const auto pair = heatsmc::solve_eigenvalue(sim.c0, sim.branch);
  const double b = std::fabs(pair.b_star_phi);

  bool all_pass = true;
  std::cout << "law,condition,lhs,rhs,margin,pass\n";
  if (sim.law == heatsmc::ControlLaw::smc || sim.law == heatsmc::ControlLaw::none) {
    const auto check = heatsmc::validate_smc_gains(sim.smc, sim.disturbance, pair.b_star_phi);
    std::cout << "smc,K>Kd*|B*phi|," << heatsmc::csv_double(sim.smc.k) << ','
              << heatsmc::csv_double(sim.disturbance.k_d * b) << ','
              << heatsmc::csv_double(check.margin) << ',' << (check.pass ? 1 : 0) << '\n';
    all_pass = all_pass && check.pass;
  }
  if (sim.law == heatsmc::ControlLaw::super_twisting || sim.law == heatsmc::ControlLaw::none) {
    const auto check = heatsmc::validate_st_gains(sim.st, sim.disturbance, pair.b_star_phi);
    const double bc = b * sim.disturbance.c.value();
    std::cout << "st,beta>|B*phi|*C," << heatsmc::csv_double(sim.st.beta) << ','
              << heatsmc::csv_double(bc) << ',' << heatsmc::csv_double(check.beta_margin) << ','
              << (check.beta_margin > 0.0 ? 1 : 0) << '\n';
    std::cout << "st,alpha>sqrt(beta+|B*phi|*C)," << heatsmc::csv_double(sim.st.alpha) << ','
              << heatsmc::csv_double(std::sqrt(sim.st.beta + bc)) << ','
              << heatsmc::csv_double(check.alpha_margin) << ',' << (check.pass ? 1 : 0) << '\n';
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : 1;
}

int run_simulate(heatsmc::Config cfg, const std::string& law, const std::string& out_dir) {
  cfg.set("law", law);
  const auto sim = cfg.to_sim_config();
  const auto record = heatsmc::run_experiment(sim);
  heatsmc::export_record(record, out_dir);
  std::cout << "wrote " << (std::filesystem::path(out_dir) / "trajectory.csv").string() << '\n';
  return record.metrics.gains_valid ? 0 : 1;
}

int run_reduced(const heatsmc::Config& cfg, const std::string& law, const std::string& out_dir) {
  const auto sim = cfg.to_sim_config();
  const auto pair = heatsmc::solve_eigenvalue(sim.c0, sim.branch);
  const double sigma0 = cfg.get_double("sigma0", 1.0);
  const double w0 = cfg.get_double("w0", 0.0);
  const double dt = cfg.get_double("reduced.dt", 1e-5);
  const double horizon = cfg.get_double("reduced.horizon", 10.0);

  heatsmc::ReducedTrajectory traj;
  if (law == "smc") {
    traj = heatsmc::simulate_smc_reduced(sigma0, sim.smc, pair.b_star_phi, sim.disturbance, dt,
                                         horizon);
  } else if (law == "st") {
    traj = heatsmc::simulate_st_reduced(sigma0, w0, sim.st, pair.b_star_phi, sim.disturbance, dt,
                                        horizon);
  } else {
    throw std::runtime_error("reduced-ode: law must be smc or st");
  }

  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / "reduced.csv";
  std::ofstream out(path);
  out << (traj.w.empty() ? "t,sigma,selection" : "t,sigma,w,selection") << '\n';
  for (std::size_t i = 0; i < traj.t.size(); ++i) {
    out << heatsmc::csv_double(traj.t[i]) << ',' << heatsmc::csv_double(traj.sigma[i]);
    if (!traj.w.empty()) out << ',' << heatsmc::csv_double(traj.w[i]);
    out << ',' << heatsmc::csv_double(traj.selection[i]) << '\n';
  }
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

int run_sweep(const heatsmc::Config& cfg, const std::string& out_dir) {
  const auto table = heatsmc::sweep(cfg);
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / "sweep.csv";
  heatsmc::export_sweep(table, path);
  std::cout << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
  for (const auto& row : table.rows) {
    if (row.status != "ok") return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-mode and super-twisting boundary control of the 1D heat equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> overrides;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key-value config file");
    sub->add_option("--out-dir", out_dir, "output directory");
    sub->add_option("--set", overrides, "override a config key, key=value")->take_all();
  };

  auto* eigen = app.add_subcommand("eigen", "solve the Robin/Neumann eigenproblem");
  double c0 = 0.5;
  int branch = 0;
  eigen->add_option("--c0", c0, "Robin coefficient")->required();
  eigen->add_option("--branch", branch, "root branch index")->required();

  auto* validate = app.add_subcommand("validate-gains", "check the gain conditions");
  add_common(validate);

  auto* sim_smc = app.add_subcommand("simulate-smc", "closed-loop run, sliding-mode law");
  add_common(sim_smc);
  auto* sim_st = app.add_subcommand("simulate-st", "closed-loop run, super-twisting law");
  add_common(sim_st);

  auto* reduced = app.add_subcommand("reduced-ode", "reduced scalar Filippov run");
  std::string reduced_law = "smc";
  reduced->add_option("--law", reduced_law, "smc or st")->required();
  add_common(reduced);

  auto* sweep_cmd = app.add_subcommand("sweep", "metrics over a parameter grid");
  add_common(sweep_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eigen->parsed()) return run_eigen(c0, branch);
    const auto cfg = load_config(config_path, overrides);
    if (validate->parsed()) return run_validate_gains(cfg);
    if (sim_smc->parsed()) return run_simulate(cfg, "smc", out_dir);
    if (sim_st->parsed()) return run_simulate(cfg, "st", out_dir);
    if (reduced->parsed()) return run_reduced(cfg, reduced_law, out_dir);
    if (sweep_cmd->parsed()) return run_sweep(cfg, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
