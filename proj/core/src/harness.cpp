#include "heatsmc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace heatsmc {

double fit_decay_rate(std::span<const double> t, std::span<const double> norms, std::size_t begin,
                      std::size_t end) {
  if (end > t.size() || begin >= end) {
    throw std::invalid_argument("fit_decay_rate: bad window");
  }
  const std::size_t n = end - begin;
  if (n < 10) {
    throw std::invalid_argument("fit_decay_rate: window shorter than 10 samples");
  }
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    if (!(norms[i] > 0.0)) {
      throw std::invalid_argument("fit_decay_rate: non-positive norm in window");
    }
    const double y = std::log(norms[i]);
    st += t[i];
    sy += y;
    stt += t[i] * t[i];
    sty += t[i] * y;
  }
  const double nn = static_cast<double>(n);
  const double slope = (nn * sty - st * sy) / (nn * stt - st * st);
  return -slope;
}

double chattering_index(std::span<const double> u, double dt, std::size_t begin, std::size_t end) {
  if (end > u.size() || begin >= end) {
    throw std::invalid_argument("chattering_index: bad window");
  }
  if (end - begin < 2) return 0.0;
  double tv = 0.0;
  for (std::size_t i = begin + 1; i < end; ++i) {
    tv += std::fabs(u[i] - u[i - 1]);
  }
  return tv / (static_cast<double>(end - begin - 1) * dt);
}

Metrics compute_metrics(const SimConfig& config, const TrajectoryRecord& traj) {
  Metrics m;
  const Eigenpair pair = solve_eigenvalue(config.c0, config.branch);

  switch (config.law) {
    case ControlLaw::none:
      m.gains_valid = true;
      break;
    case ControlLaw::smc:
      m.gains_valid = validate_smc_gains(config.smc, config.disturbance, pair.b_star_phi).pass;
      break;
    case ControlLaw::super_twisting:
      m.gains_valid =
          config.disturbance.c.has_value() &&
          validate_st_gains(config.st, config.disturbance, pair.b_star_phi).pass;
      break;
  }

  if (config.law == ControlLaw::smc && m.gains_valid && !traj.sigma.empty()) {
    m.reach_bound =
        reaching_time_bound(traj.sigma.front(), config.smc, config.disturbance, pair.b_star_phi);
  }

  const auto t_reach = detect_reaching_time(traj.t, traj.sigma, {}, kReachBand, kReachDwell);
  m.reached = t_reach.has_value();
  m.t_reach = t_reach;

  std::size_t chat_begin = 0;
  if (m.reached) {
    const auto it = std::lower_bound(traj.t.begin(), traj.t.end(), *t_reach);
    const auto reach_idx = static_cast<std::size_t>(it - traj.t.begin());
    chat_begin = reach_idx;

    double sup = 0.0;
    for (std::size_t i = reach_idx; i < traj.sigma.size(); ++i) {
      sup = std::max(sup, std::fabs(traj.sigma[i]));
    }
    m.post_reach_sigma_sup = sup;

    const auto fit_it =
        std::lower_bound(traj.t.begin(), traj.t.end(), *t_reach + kDecayFitDelay);
    const auto fit_begin = static_cast<std::size_t>(fit_it - traj.t.begin());
    if (traj.t.size() - fit_begin >= 10) {
      bool positive = true;
      for (std::size_t i = fit_begin; i < traj.norm_z.size(); ++i) {
        positive = positive && traj.norm_z[i] > 0.0;
      }
      if (positive) {
        m.decay_rate = fit_decay_rate(traj.t, traj.norm_z, fit_begin, traj.t.size());
      }
    }
  }
  m.chattering_index = chattering_index(traj.u, config.dt, chat_begin, traj.u.size());
  return m;
}

ExperimentRecord run_experiment(const SimConfig& config) {
  ExperimentRecord record;
  record.config = config;
  record.trajectory = simulate(config);
  record.metrics = compute_metrics(config, record.trajectory);
  return record;
}

std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string csv_optional(const std::optional<double>& v) {
  return v.has_value() ? csv_double(*v) : "nan";
}

}  // namespace

void export_record(const ExperimentRecord& record, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const TrajectoryRecord& traj = record.trajectory;

  {
    std::ofstream out(out_dir / "trajectory.csv");
    if (!out) throw std::runtime_error("export_record: cannot write trajectory.csv");
    out << "t,sigma,u,aux,norm_z\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      out << csv_double(traj.t[i]) << ',' << csv_double(traj.sigma[i]) << ','
          << csv_double(traj.u[i]) << ',' << csv_double(traj.aux[i]) << ','
          << csv_double(traj.norm_z[i]) << '\n';
    }
  }

  if (!traj.snapshots.empty()) {
    std::ofstream out(out_dir / "field.csv");
    if (!out) throw std::runtime_error("export_record: cannot write field.csv");
    out << "t,x,z\n";
    for (const auto& snap : traj.snapshots) {
      for (std::size_t i = 0; i < snap.values.size(); ++i) {
        out << csv_double(snap.t) << ',' << csv_double(traj.grid.x(static_cast<int>(i))) << ','
            << csv_double(snap.values[i]) << '\n';
      }
    }
  }

  {
    const Metrics& m = record.metrics;
    std::ofstream out(out_dir / "metrics.csv");
    if (!out) throw std::runtime_error("export_record: cannot write metrics.csv");
    out << "t_reach,reach_bound,post_reach_sigma_sup,decay_rate,chattering_index,gains_valid,"
           "reached\n";
    out << csv_optional(m.t_reach) << ',' << csv_optional(m.reach_bound) << ','
        << csv_optional(m.post_reach_sigma_sup) << ',' << csv_optional(m.decay_rate) << ','
        << csv_double(m.chattering_index) << ',' << (m.gains_valid ? 1 : 0) << ','
        << (m.reached ? 1 : 0) << '\n';
  }
}

SweepTable sweep(const Config& base) {
  SweepTable table;
  std::vector<std::vector<std::string>> choices;

  constexpr std::string_view prefix = "sweep.";
  for (const auto& [key, value] : base.entries()) {
    if (key.rfind(prefix, 0) != 0) continue;
    table.keys.push_back(key.substr(prefix.size()));
    std::vector<std::string> vals;
    std::string token;
    std::istringstream in{value};
    while (std::getline(in, token, ',')) {
      const auto b = token.find_first_not_of(" \t");
      const auto e = token.find_last_not_of(" \t");
      vals.push_back(b == std::string::npos ? "" : token.substr(b, e - b + 1));
    }
    if (vals.empty()) vals.push_back("");
    choices.push_back(std::move(vals));
  }
  if (table.keys.empty()) return table;

  std::vector<std::size_t> idx(table.keys.size(), 0);
  while (true) {
    Config point = base;
    SweepRow row;
    for (std::size_t k = 0; k < table.keys.size(); ++k) {
      point.set(table.keys[k], choices[k][idx[k]]);
      row.values.push_back(choices[k][idx[k]]);
    }
    try {
      row.metrics = run_experiment(point.to_sim_config()).metrics;
      row.status = "ok";
    } catch (const std::exception& e) {
      row.status = e.what();
    }
    table.rows.push_back(std::move(row));

    // row-major advance, last key fastest
    std::size_t k = table.keys.size();
    while (k-- > 0) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return table;
    }
  }
}

void export_sweep(const SweepTable& table, const std::filesystem::path& out_path) {
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("export_sweep: cannot write " + out_path.string());
  for (const auto& key : table.keys) out << key << ',';
  out << "t_reach,reach_bound,post_reach_sigma_sup,decay_rate,chattering_index,gains_valid,"
         "reached,status\n";
  for (const auto& row : table.rows) {
    for (const auto& v : row.values) out << v << ',';
    const Metrics& m = row.metrics;
    out << csv_optional(m.t_reach) << ',' << csv_optional(m.reach_bound) << ','
        << csv_optional(m.post_reach_sigma_sup) << ',' << csv_optional(m.decay_rate) << ','
        << csv_double(m.chattering_index) << ',' << (m.gains_valid ? 1 : 0) << ','
        << (m.reached ? 1 : 0) << ',' << row.status << '\n';
  }
}

}  // namespace heatsmc
