#pragma once

#include <map>
#include <string>
#include <vector>

#include "heatsmc/heat_sim.hpp"

namespace heatsmc {

/// Flat `key = value` configuration with dotted keys. Lines starting with
/// '#' and blank lines are ignored. Later assignments win.
class Config {
 public:
  Config() = default;

  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  void set(const std::string& key, const std::string& value) { entries_[key] = value; }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& fallback) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

  /// Builds a SimConfig from the documented keys (c0, nx, dt, horizon, z0,
  /// disturbance.*, branch, gains.*, law, selection, integrator, v0,
  /// snapshots, snapshot_stride). Throws std::invalid_argument on unknown
  /// enum values.
  SimConfig to_sim_config() const;

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace heatsmc
