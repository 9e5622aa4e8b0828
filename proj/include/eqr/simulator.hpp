#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqr/flatness.hpp"
#include "eqr/lifting.hpp"
#include "eqr/lqr.hpp"
#include "eqr/plqr.hpp"

namespace eqr {

enum class Controller { Eqr, Plqr };
enum class TrajectoryKind { Helix, Hover };

const char* to_string(Controller c);
const char* to_string(TrajectoryKind k);

/// Initial state relative to the desired start. When `bearing` is set the
/// initial eta is (sin th cos ph, sin th sin ph, cos th); otherwise eta_d(0).
struct InitialCondition {
  struct Bearing {
    double theta = 0.0;
    double phi = 0.0;
  };
  std::optional<Bearing> bearing;
  Vec3 dv = Vec3::Zero();
  Vec3 dx = Vec3::Zero();
};

struct SimConfig {
  double t_f = 30.0;
  double dt_plant = 1e-3;
  double dt_gain_grid = 1e-3;
  Controller controller = Controller::Eqr;
  TrajectoryKind trajectory = TrajectoryKind::Helix;
  InitialCondition initial;
  Params params;
  WeightSet weights = WeightSet::paper_defaults();
  int sweep_n_theta = 41;
  int sweep_n_phi = 41;

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Everything that depends only on the desired trajectory: shared read-only
/// by every closed-loop run of a scenario.
struct Scenario {
  std::shared_ptr<const FlatCurve> curve;
  Params params;
  double t_f = 0.0;
  double dt_plant = 0.0;
  DesiredSchedule desired;
  std::shared_ptr<const LiftedTrajectory> lifted;
  GainSchedule eqr_gains;
  GainSchedule plqr_gains;
};

Scenario build_scenario(const SimConfig& cfg);

/// Final-second mean embedded error norm below which a run counts as converged.
inline constexpr double kConvergenceThreshold = 1e-2;
/// Embedded error norm treated as divergence.
inline constexpr double kDivergenceBound = 1e3;

struct SimResult {
  Controller controller = Controller::Eqr;
  std::vector<double> times;
  std::vector<State> states;
  std::vector<Input> inputs;
  std::vector<double> error_norm;  // |xi - xi_d| in R^9
  std::vector<double> eps_norm;    // |eps| for EqR, NaN for P-LQR
  double rmse = std::numeric_limits<double>::infinity();
  double final_error_mean = std::numeric_limits<double>::infinity();
  double max_error = std::numeric_limits<double>::infinity();
  bool converged = false;
  bool diverged = false;
  std::string failure_reason;
};

/// Algorithm 2: xi_e = act(X_d^{-1}, xi), eps = chart(xi_e), u = u_d - K eps.
/// Thrust is clamped at zero. Propagates ChartSingularity.
Input step_controller_eqr(const State& xi, double t, const LiftedTrajectory& lifted,
                          const GainSchedule& gains);

/// Initial plant state for the given perturbation of the desired start.
State initial_state(const Scenario& scenario, const InitialCondition& ic);

/// Fixed-step RK4 closed loop. The feedback law is evaluated at every RK4
/// stage and eta is renormalised after each step. With `record` false only
/// the summary metrics are kept.
SimResult integrate_closed_loop(const Scenario& scenario, Controller controller,
                                const InitialCondition& ic, bool record = true);

SimResult integrate_closed_loop(const SimConfig& cfg);

/// sqrt of the mean squared norm of the stacked errors.
double rmse(const std::vector<Vec9>& errors);
/// rmse of xi - xi_d over aligned series.
double rmse(const std::vector<State>& states, const std::vector<State>& desired);

}  // namespace eqr
