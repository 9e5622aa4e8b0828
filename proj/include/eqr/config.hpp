#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqr/simulator.hpp"

namespace eqr {

/// Malformed or unknown configuration entry; `line` is 1-based (0 = not from a file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line_no)
      : std::runtime_error(what), line(line_no) {}
  int line;
};

struct ExperimentConfig {
  SimConfig sim;
  std::string out_dir = "out";
  bool dump_trajectory = true;
  bool dump_lifted = true;
  bool dump_linearization = true;
  bool dump_gains = true;
  double pgm_clip = 5.0;
  int threads = 0;
};

struct ConfigKey {
  std::string name;
  std::string help;
};

/// All recognised keys, in help order.
std::vector<ConfigKey> config_keys();

/// Current value of `key` rendered as config text.
std::string config_value(const ExperimentConfig& cfg, const std::string& key);

/// Applies one key; throws ConfigError (line = 0) on bad keys or values.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Parses `key = value` lines on top of the defaults. '#' starts a comment.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Key listing with defaults, used by --help.
std::string config_help();

}  // namespace eqr
