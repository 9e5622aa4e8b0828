#include "eqr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqr/errors.hpp"

namespace eqr {

const char* to_string(Controller c) { return c == Controller::Eqr ? "eqr" : "plqr"; }

const char* to_string(TrajectoryKind k) { return k == TrajectoryKind::Helix ? "helix" : "hover"; }

void SimConfig::validate() const {
  if (!(t_f > 0.0)) throw std::invalid_argument("t_f must be positive");
  if (!(dt_plant > 0.0) || !(dt_gain_grid > 0.0)) {
    throw std::invalid_argument("time steps must be positive");
  }
  if (!(params.mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (sweep_n_theta < 2 || sweep_n_phi < 2) {
    throw std::invalid_argument("sweep grid must be at least 2x2");
  }
  weights.validate();
}

Scenario build_scenario(const SimConfig& cfg) {
  cfg.validate();
  Scenario s;
  if (cfg.trajectory == TrajectoryKind::Helix) {
    s.curve = std::make_shared<HelixCurve>();
  } else {
    s.curve = std::make_shared<HoverCurve>();
  }
  s.params = cfg.params;
  s.t_f = cfg.t_f;
  s.dt_plant = cfg.dt_plant;
  s.desired = sample_trajectory(*s.curve, 0.0, cfg.t_f, cfg.dt_gain_grid, cfg.params);
  s.lifted = std::make_shared<LiftedTrajectory>(lift_trajectory(s.desired, origin(), cfg.params));
  s.eqr_gains = eqr_gains(*s.lifted, cfg.weights, cfg.params);
  s.plqr_gains = plqr_gains(s.desired, cfg.weights, cfg.params);
  return s;
}

Input step_controller_eqr(const State& xi, double t, const LiftedTrajectory& lifted,
                          const GainSchedule& gains) {
  const LiftedTrajectory::Sample d = lifted.at(t);
  const LocalCoords eps = local_error(d.element, xi);
  const Vec4 u = d.input.vector() - eqr_gain_at(gains, t) * eps;
  return {u.head<3>(), std::max(0.0, u(3))};
}

State initial_state(const Scenario& scenario, const InitialCondition& ic) {
  const DesiredPoint d0 = flat_to_state(*scenario.curve, 0.0, scenario.params);
  State xi = d0.state;
  if (ic.bearing) {
    const double th = ic.bearing->theta;
    const double ph = ic.bearing->phi;
    xi.eta = Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  }
  xi.vel += ic.dv;
  xi.pos += ic.dx;
  return xi;
}

namespace {

State advance(const State& xi, const Vec9& rate, double h) {
  return State::from_vector(xi.vector() + h * rate);
}

}  // namespace

SimResult integrate_closed_loop(const Scenario& scenario, Controller controller,
                                const InitialCondition& ic, bool record) {
  const Params& p = scenario.params;
  const double h = scenario.dt_plant;
  const long steps = std::lround(scenario.t_f / h);

  auto control = [&](const State& xi, double t) -> Input {
    if (controller == Controller::Eqr) {
      return step_controller_eqr(xi, t, *scenario.lifted, scenario.eqr_gains);
    }
    const DesiredPoint d = flat_to_state(*scenario.curve, t, p);
    return plqr_control(xi, d, gain_at(scenario.plqr_gains, t));
  };

  SimResult res;
  res.controller = controller;
  if (record) {
    const auto n = static_cast<std::size_t>(steps + 1);
    res.times.reserve(n);
    res.states.reserve(n);
    res.inputs.reserve(n);
    res.error_norm.reserve(n);
    res.eps_norm.reserve(n);
  }

  State xi = initial_state(scenario, ic);
  double sum_sq = 0.0;
  double max_err = 0.0;
  double tail_sum = 0.0;
  long tail_count = 0;
  const double tail_start = scenario.t_f - 1.0;
  long logged = 0;

  try {
    for (long k = 0; k <= steps; ++k) {
      const double t = std::min(static_cast<double>(k) * h, scenario.t_f);
      const DesiredPoint d = flat_to_state(*scenario.curve, t, p);
      const double err = embedded_error(xi, d.state).norm();
      if (!std::isfinite(err) || err > kDivergenceBound) {
        throw Error("state diverged at t = " + std::to_string(t));
      }
      const Input u = control(xi, t);
      sum_sq += err * err;
      max_err = std::max(max_err, err);
      if (t >= tail_start - 1e-12) {
        tail_sum += err;
        ++tail_count;
      }
      ++logged;
      if (record) {
        double eps_n = std::numeric_limits<double>::quiet_NaN();
        if (controller == Controller::Eqr) {
          eps_n = local_error(scenario.lifted->at(t).element, xi).norm();
        }
        res.times.push_back(t);
        res.states.push_back(xi);
        res.inputs.push_back(u);
        res.error_norm.push_back(err);
        res.eps_norm.push_back(eps_n);
      }
      if (k == steps) break;

      const double t_half = t + 0.5 * h;
      const double t_next = std::min(t + h, scenario.t_f);
      const Vec9 k1 = dynamics(xi, u, p);
      const State s2 = advance(xi, k1, 0.5 * h);
      const Vec9 k2 = dynamics(s2, control(s2, t_half), p);
      const State s3 = advance(xi, k2, 0.5 * h);
      const Vec9 k3 = dynamics(s3, control(s3, t_half), p);
      const State s4 = advance(xi, k3, h);
      const Vec9 k4 = dynamics(s4, control(s4, t_next), p);
      xi = renormalized(advance(xi, (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0, h));
    }
  } catch (const Error& e) {
    res.diverged = true;
    res.failure_reason = e.what();
  }

  if (!res.diverged) {
    res.rmse = std::sqrt(sum_sq / static_cast<double>(logged));
    res.max_error = max_err;
    res.final_error_mean = tail_count > 0 ? tail_sum / static_cast<double>(tail_count) : max_err;
    res.converged = res.final_error_mean < kConvergenceThreshold;
  }
  return res;
}

SimResult integrate_closed_loop(const SimConfig& cfg) {
  const Scenario s = build_scenario(cfg);
  return integrate_closed_loop(s, cfg.controller, cfg.initial, true);
}

double rmse(const std::vector<Vec9>& errors) {
  if (errors.empty()) return 0.0;
  double sum = 0.0;
  for (const Vec9& e : errors) sum += e.squaredNorm();
  return std::sqrt(sum / static_cast<double>(errors.size()));
}

double rmse(const std::vector<State>& states, const std::vector<State>& desired) {
  if (states.size() != desired.size()) {
    throw std::invalid_argument("rmse: series lengths differ");
  }
  std::vector<Vec9> errors;
  errors.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    errors.push_back(states[i].vector() - desired[i].vector());
  }
  return rmse(errors);
}

}  // namespace eqr
