#include "heatsmc/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heatsmc {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("Config: cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("Config: missing '=' on line " + std::to_string(lineno));
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("Config: empty key on line " + std::to_string(lineno));
    }
    cfg.entries_[key] = value;
  }
  return cfg;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return std::stod(it->second);
}

int Config::get_int(const std::string& key, int fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return std::stoi(it->second);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("Config: bad boolean for key " + key + ": " + v);
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<double> out;
  std::istringstream in(it->second);
  std::string token;
  while (std::getline(in, token, ',')) {
    out.push_back(std::stod(trim(token)));
  }
  return out;
}

SimConfig Config::to_sim_config() const {
  SimConfig sim;
  sim.c0 = get_double("c0", sim.c0);
  sim.grid.n_nodes = get_int("nx", sim.grid.n_nodes);
  sim.dt = get_double("dt", sim.dt);
  sim.horizon = get_double("horizon", sim.horizon);
  sim.z0_poly = get_double_list("z0", sim.z0_poly);
  sim.branch = get_int("branch", sim.branch);
  sim.v0 = get_double("v0", sim.v0);
  sim.smc.k = get_double("gains.K", sim.smc.k);
  sim.st.alpha = get_double("gains.alpha", sim.st.alpha);
  sim.st.beta = get_double("gains.beta", sim.st.beta);
  sim.snapshots = get_bool("snapshots", sim.snapshots);
  sim.snapshot_stride = get_int("snapshot_stride", sim.snapshot_stride);

  const std::string kind = get_string("disturbance.kind", "sinusoid");
  const double amp = get_double("disturbance.amplitude", 2.0);
  if (kind == "zero") {
    sim.disturbance = DisturbanceSpec::zero();
  } else if (kind == "constant") {
    sim.disturbance = DisturbanceSpec::constant(amp);
  } else if (kind == "sinusoid") {
    sim.disturbance = DisturbanceSpec::sinusoid(amp, get_double("disturbance.omega", 1.0));
  } else {
    throw std::invalid_argument("Config: unknown disturbance.kind " + kind);
  }

  const std::string law = get_string("law", "smc");
  if (law == "none") {
    sim.law = ControlLaw::none;
  } else if (law == "smc") {
    sim.law = ControlLaw::smc;
  } else if (law == "st") {
    sim.law = ControlLaw::super_twisting;
  } else {
    throw std::invalid_argument("Config: unknown law " + law);
  }

  const std::string selection = get_string("selection", "implicit");
  if (selection == "implicit") {
    sim.selection = SignSelection::implicit_projection;
  } else if (selection == "explicit") {
    sim.selection = SignSelection::explicit_sign;
  } else {
    throw std::invalid_argument("Config: unknown selection " + selection);
  }

  const std::string integrator = get_string("integrator", "explicit");
  if (integrator == "explicit") {
    sim.integrator = Integrator::explicit_euler;
  } else if (integrator == "implicit") {
    sim.integrator = Integrator::implicit_euler;
  } else {
    throw std::invalid_argument("Config: unknown integrator " + integrator);
  }

  return sim;
}

}  // namespace heatsmc
