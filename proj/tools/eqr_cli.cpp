// Command-line front end: lift | linearize | run | sweep.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "eqr/config.hpp"
#include "eqr/csv.hpp"
#include "eqr/errors.hpp"
#include "eqr/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kGateFailed = 1;
constexpr int kUsage = 2;

constexpr double kProjectionGate = 1e-5;
constexpr double kLinearizationGate = 1e-5;
constexpr int kLinearizationSamples = 50;

struct Options {
  std::string config_path;
  std::string controller;
  std::string out_dir;
  int threads = -1;
};

eqr::ExperimentConfig resolve(const Options& opt) {
  eqr::ExperimentConfig cfg;
  if (!opt.config_path.empty()) cfg = eqr::load_config(opt.config_path);
  if (!opt.controller.empty()) eqr::set_config_value(cfg, "controller", opt.controller);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (opt.threads >= 0) cfg.threads = opt.threads;
  cfg.sim.validate();
  return cfg;
}

std::ofstream open_out(const eqr::ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  std::ofstream os(fs::path(cfg.out_dir) / name);
  if (!os) throw std::runtime_error("cannot write " + (fs::path(cfg.out_dir) / name).string());
  return os;
}

void write_metadata(const eqr::ExperimentConfig& cfg, const std::string& command) {
  auto os = open_out(cfg, "metadata.txt");
  os << "# command: " << command << "\n";
  os << "# rmse: sqrt of the time average over plant samples of |e|^2, where\n";
  os << "#       e = (eta - eta_d, v - v_d, x - x_d) in R^9 (controller-neutral).\n";
  os << "# converged: mean |e| over the final second < " << eqr::kConvergenceThreshold << "\n";
  for (const auto& key : eqr::config_keys()) {
    os << key.name << " = " << eqr::config_value(cfg, key.name) << "\n";
  }
}

eqr::DesiredSchedule desired_for(const eqr::SimConfig& sim) {
  if (sim.trajectory == eqr::TrajectoryKind::Helix) {
    return eqr::sample_trajectory(eqr::HelixCurve{}, 0.0, sim.t_f, sim.dt_gain_grid, sim.params);
  }
  return eqr::sample_trajectory(eqr::HoverCurve{}, 0.0, sim.t_f, sim.dt_gain_grid, sim.params);
}

int cmd_lift(const eqr::ExperimentConfig& cfg) {
  const eqr::DesiredSchedule desired = desired_for(cfg.sim);
  const eqr::LiftedTrajectory lifted = eqr::lift_trajectory(desired, eqr::origin(), cfg.sim.params);
  if (cfg.dump_trajectory) {
    auto os = open_out(cfg, "trajectory.csv");
    eqr::io::write_trajectory_csv(os, desired);
  }
  if (cfg.dump_lifted) {
    auto os = open_out(cfg, "lifted.csv");
    eqr::io::write_lifted_csv(os, lifted);
  }
  const double err = eqr::max_projection_error(lifted, desired);
  std::printf("nodes: %zu\nmax projection error: %.3e (gate %.1e)\n", lifted.size(), err,
              kProjectionGate);
  return err > kProjectionGate ? kGateFailed : kOk;
}

int cmd_linearize(const eqr::ExperimentConfig& cfg) {
  const eqr::DesiredSchedule desired = desired_for(cfg.sim);
  const eqr::LiftedTrajectory lifted = eqr::lift_trajectory(desired, eqr::origin(), cfg.sim.params);
  const auto lin = eqr::linearize_schedule(lifted, cfg.sim.params);
  if (cfg.dump_linearization) {
    auto os = open_out(cfg, "linearization.csv");
    eqr::io::write_linearization_csv(os, lin);
  }
  if (cfg.dump_gains) {
    const eqr::GainSchedule k_eqr = eqr::eqr_gains(lifted, cfg.sim.weights, cfg.sim.params);
    const eqr::GainSchedule k_plqr = eqr::plqr_gains(desired, cfg.sim.weights, cfg.sim.params);
    auto a = open_out(cfg, "gains_eqr.csv");
    eqr::io::write_gains_csv(a, k_eqr);
    auto b = open_out(cfg, "gains_plqr.csv");
    eqr::io::write_gains_csv(b, k_plqr);
  }

  double worst = 0.0;
  const std::size_t n = lin.size();
  const std::size_t samples = std::min<std::size_t>(kLinearizationSamples, n);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = samples > 1 ? s * (n - 1) / (samples - 1) : 0;
    const eqr::GroupElement& X = lifted.elements()[i];
    const auto fd = eqr::numeric_linearization(X, eqr::act(X, eqr::origin()), lifted.inputs()[i],
                                               cfg.sim.params);
    worst = std::max(worst, eqr::relative_difference(fd, lin[i]));
  }
  std::printf("nodes: %zu\nfinite-difference relative residual (max over %zu samples): %.3e (gate %.1e)\n",
              n, samples, worst, kLinearizationGate);
  const eqr::Input& u0 = lifted.inputs().front();
  const eqr::Vec3 omega_body = lifted.elements().front().rotation.transpose() * u0.omega;
  const auto closed = eqr::linearize_closed_form(omega_body, u0.thrust, cfg.sim.params);
  std::printf("closed-form A (frame-rotated Omega_d) vs generic at t0: max |dA| = %.3e\n",
              (closed.A - lin.front().A).cwiseAbs().maxCoeff());
  return worst > kLinearizationGate ? kGateFailed : kOk;
}

int cmd_run(const eqr::ExperimentConfig& cfg) {
  const eqr::Scenario scenario = eqr::build_scenario(cfg.sim);
  const eqr::SimResult res =
      eqr::integrate_closed_loop(scenario, cfg.sim.controller, cfg.sim.initial, true);
  {
    auto os = open_out(cfg, std::string("run_") + eqr::to_string(cfg.sim.controller) + ".csv");
    eqr::io::write_run_csv(os, res);
  }
  write_metadata(cfg, "run");
  std::printf("controller: %s\nrmse: %.6e\nfinal-second mean error: %.6e\nconverged: %s\n",
              eqr::to_string(res.controller), res.rmse, res.final_error_mean,
              res.converged ? "yes" : "no");
  if (res.diverged) {
    std::printf("diverged: %s\n", res.failure_reason.c_str());
    return kGateFailed;
  }
  return kOk;
}

int cmd_sweep(const eqr::ExperimentConfig& cfg) {
  const eqr::Scenario scenario = eqr::build_scenario(cfg.sim);
  const int nt = cfg.sim.sweep_n_theta;
  const int np = cfg.sim.sweep_n_phi;
  const auto cells = eqr::sweep(scenario, cfg.sim.initial, nt, np, cfg.threads);
  {
    auto os = open_out(cfg, "sweep.csv");
    eqr::io::write_sweep_csv(os, cells);
  }
  {
    auto os = open_out(cfg, "heatmap_eqr.pgm");
    eqr::io::write_pgm(os, cells, nt, np, eqr::Controller::Eqr, cfg.pgm_clip);
  }
  {
    auto os = open_out(cfg, "heatmap_plqr.pgm");
    eqr::io::write_pgm(os, cells, nt, np, eqr::Controller::Plqr, cfg.pgm_clip);
  }
  write_metadata(cfg, "sweep");
  const auto conv_eqr = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.converged_eqr; });
  const auto conv_plqr = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.converged_plqr; });
  std::printf("cells: %zu\nconverged eqr: %ld\nconverged plqr: %ld\n", cells.size(),
              static_cast<long>(conv_eqr), static_cast<long>(conv_plqr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant regulator tracking experiments"};
  app.footer(eqr::config_help());
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "key = value configuration file");
    sub->add_option("--controller", opt.controller, "eqr | plqr (overrides config)")
        ->check(CLI::IsMember({"eqr", "plqr"}));
    sub->add_option("--out", opt.out_dir, "output directory (overrides config)");
    sub->add_option("--threads", opt.threads, "sweep worker threads, 0 = auto")
        ->check(CLI::NonNegativeNumber);
  };
  CLI::App* lift = app.add_subcommand("lift", "lift the desired trajectory onto SE_2(3)");
  CLI::App* linearize = app.add_subcommand("linearize", "linearize the error dynamics and solve for gains");
  CLI::App* run = app.add_subcommand("run", "single closed-loop run");
  CLI::App* sweep = app.add_subcommand("sweep", "initial-bearing sweep over the sphere");
  for (CLI::App* sub : {lift, linearize, run, sweep}) {
    add_common(sub);
    sub->footer(eqr::config_help());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const eqr::ExperimentConfig cfg = resolve(opt);
    if (*lift) return cmd_lift(cfg);
    if (*linearize) return cmd_linearize(cfg);
    if (*run) return cmd_run(cfg);
    if (*sweep) return cmd_sweep(cfg);
  } catch (const eqr::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kUsage;
  } catch (const eqr::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kGateFailed;
  }
  return kUsage;
}
