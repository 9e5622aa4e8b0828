#include "eqr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace eqr {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'", 0);
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'", 0);
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + text + "'", 0);
}

std::vector<double> to_list(const std::string& key, const std::string& text, std::size_t n) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  if (out.size() != n) {
    throw ConfigError(key + ": expected " + std::to_string(n) + " comma-separated values", 0);
  }
  return out;
}

std::string num(double v) {
  // Shortest text that parses back to the same double.
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename V>
std::string list(const V& v) {
  std::string s;
  for (long i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += num(v(i));
  }
  return s;
}

struct KeySpec {
  const char* name;
  const char* help;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

const std::vector<KeySpec>& specs() {
  static const std::vector<KeySpec> table = {
      {"scenario.trajectory", "desired trajectory: helix | hover",
       [](ExperimentConfig& c, const std::string& v) {
         const std::string t = trim(v);
         if (t == "helix") c.sim.trajectory = TrajectoryKind::Helix;
         else if (t == "hover") c.sim.trajectory = TrajectoryKind::Hover;
         else throw ConfigError("scenario.trajectory: expected helix or hover", 0);
       },
       [](const ExperimentConfig& c) { return std::string(to_string(c.sim.trajectory)); }},
      {"scenario.t_f", "horizon [s]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.t_f = to_double("scenario.t_f", v); },
       [](const ExperimentConfig& c) { return num(c.sim.t_f); }},
      {"plant.dt", "plant RK4 step [s]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.dt_plant = to_double("plant.dt", v); },
       [](const ExperimentConfig& c) { return num(c.sim.dt_plant); }},
      {"gain.dt", "grid of the lifted trajectory and gain schedule [s]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.dt_gain_grid = to_double("gain.dt", v); },
       [](const ExperimentConfig& c) { return num(c.sim.dt_gain_grid); }},
      {"controller", "closed-loop controller for `run`: eqr | plqr",
       [](ExperimentConfig& c, const std::string& v) {
         const std::string t = trim(v);
         if (t == "eqr") c.sim.controller = Controller::Eqr;
         else if (t == "plqr") c.sim.controller = Controller::Plqr;
         else throw ConfigError("controller: expected eqr or plqr", 0);
       },
       [](const ExperimentConfig& c) { return std::string(to_string(c.sim.controller)); }},
      {"params.mass", "vehicle mass [kg]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.params.mass = to_double("params.mass", v); },
       [](const ExperimentConfig& c) { return num(c.sim.params.mass); }},
      {"params.gravity", "gravity [m/s^2]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.params.gravity = to_double("params.gravity", v); },
       [](const ExperimentConfig& c) { return num(c.sim.params.gravity); }},
      {"init.theta", "polar angle of eta(0) [rad], or none for eta_d(0)",
       [](ExperimentConfig& c, const std::string& v) {
         if (trim(v) == "none") { c.sim.initial.bearing.reset(); return; }
         auto b = c.sim.initial.bearing.value_or(InitialCondition::Bearing{});
         b.theta = to_double("init.theta", v);
         c.sim.initial.bearing = b;
       },
       [](const ExperimentConfig& c) {
         return c.sim.initial.bearing ? num(c.sim.initial.bearing->theta) : std::string("none");
       }},
      {"init.phi", "azimuth of eta(0) [rad], or none for eta_d(0)",
       [](ExperimentConfig& c, const std::string& v) {
         if (trim(v) == "none") { c.sim.initial.bearing.reset(); return; }
         auto b = c.sim.initial.bearing.value_or(InitialCondition::Bearing{});
         b.phi = to_double("init.phi", v);
         c.sim.initial.bearing = b;
       },
       [](const ExperimentConfig& c) {
         return c.sim.initial.bearing ? num(c.sim.initial.bearing->phi) : std::string("none");
       }},
      {"init.dv", "velocity offset from v_d(0) [m/s], 3 values",
       [](ExperimentConfig& c, const std::string& v) {
         const auto l = to_list("init.dv", v, 3);
         c.sim.initial.dv = Vec3(l[0], l[1], l[2]);
       },
       [](const ExperimentConfig& c) { return list(c.sim.initial.dv); }},
      {"init.dx", "position offset from x_d(0) [m], 3 values",
       [](ExperimentConfig& c, const std::string& v) {
         const auto l = to_list("init.dx", v, 3);
         c.sim.initial.dx = Vec3(l[0], l[1], l[2]);
       },
       [](const ExperimentConfig& c) { return list(c.sim.initial.dx); }},
      {"weights.F", "diagonal of the terminal weight (embedded coordinates), 9 values",
       [](ExperimentConfig& c, const std::string& v) {
         const auto l = to_list("weights.F", v, 9);
         c.sim.weights.F = Vec9(l.data()).asDiagonal();
       },
       [](const ExperimentConfig& c) { return list(Vec9(c.sim.weights.F.diagonal())); }},
      {"weights.Q", "diagonal of the running state weight, 9 values",
       [](ExperimentConfig& c, const std::string& v) {
         const auto l = to_list("weights.Q", v, 9);
         c.sim.weights.Q = Vec9(l.data()).asDiagonal();
       },
       [](const ExperimentConfig& c) { return list(Vec9(c.sim.weights.Q.diagonal())); }},
      {"weights.S", "diagonal of the input weight, 4 values",
       [](ExperimentConfig& c, const std::string& v) {
         const auto l = to_list("weights.S", v, 4);
         c.sim.weights.S = Vec4(l.data()).asDiagonal();
       },
       [](const ExperimentConfig& c) { return list(Vec4(c.sim.weights.S.diagonal())); }},
      {"sweep.n_theta", "sweep rows over theta in [0, pi]",
       [](ExperimentConfig& c, const std::string& v) { c.sim.sweep_n_theta = to_int("sweep.n_theta", v); },
       [](const ExperimentConfig& c) { return std::to_string(c.sim.sweep_n_theta); }},
      {"sweep.n_phi", "sweep columns over phi in [0, 2 pi)",
       [](ExperimentConfig& c, const std::string& v) { c.sim.sweep_n_phi = to_int("sweep.n_phi", v); },
       [](const ExperimentConfig& c) { return std::to_string(c.sim.sweep_n_phi); }},
      {"sweep.clip", "RMSE mapped to white in the PGM heatmaps",
       [](ExperimentConfig& c, const std::string& v) { c.pgm_clip = to_double("sweep.clip", v); },
       [](const ExperimentConfig& c) { return num(c.pgm_clip); }},
      {"output.dir", "output directory (created if missing)",
       [](ExperimentConfig& c, const std::string& v) { c.out_dir = trim(v); },
       [](const ExperimentConfig& c) { return c.out_dir; }},
      {"dump.trajectory", "write trajectory.csv",
       [](ExperimentConfig& c, const std::string& v) { c.dump_trajectory = to_bool("dump.trajectory", v); },
       [](const ExperimentConfig& c) { return std::string(c.dump_trajectory ? "true" : "false"); }},
      {"dump.lifted", "write lifted.csv",
       [](ExperimentConfig& c, const std::string& v) { c.dump_lifted = to_bool("dump.lifted", v); },
       [](const ExperimentConfig& c) { return std::string(c.dump_lifted ? "true" : "false"); }},
      {"dump.linearization", "write linearization.csv",
       [](ExperimentConfig& c, const std::string& v) { c.dump_linearization = to_bool("dump.linearization", v); },
       [](const ExperimentConfig& c) { return std::string(c.dump_linearization ? "true" : "false"); }},
      {"dump.gains", "write gains_eqr.csv and gains_plqr.csv",
       [](ExperimentConfig& c, const std::string& v) { c.dump_gains = to_bool("dump.gains", v); },
       [](const ExperimentConfig& c) { return std::string(c.dump_gains ? "true" : "false"); }},
      {"run.threads", "worker threads for sweep (0 = OpenMP default)",
       [](ExperimentConfig& c, const std::string& v) { c.threads = to_int("run.threads", v); },
       [](const ExperimentConfig& c) { return std::to_string(c.threads); }},
  };
  return table;
}

const KeySpec& find_spec(const std::string& key) {
  for (const KeySpec& s : specs()) {
    if (key == s.name) return s;
  }
  throw ConfigError("unknown key '" + key + "'", 0);
}

}  // namespace

std::vector<ConfigKey> config_keys() {
  std::vector<ConfigKey> keys;
  for (const KeySpec& s : specs()) keys.push_back({s.name, s.help});
  return keys;
}

std::string config_value(const ExperimentConfig& cfg, const std::string& key) {
  return find_spec(key).get(cfg);
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  find_spec(key).set(cfg, value);
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      set_config_value(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
  return parse_config(in);
}

std::string config_help() {
  const ExperimentConfig defaults;
  std::ostringstream os;
  os << "Config keys (key = value, '#' comments):\n";
  for (const KeySpec& s : specs()) {
    os << "  " << s.name << " = " << s.get(defaults) << "\n      " << s.help << "\n";
  }
  return os.str();
}

}  // namespace eqr
