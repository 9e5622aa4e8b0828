#include <gtest/gtest.h>

#include "eqr/simulator.hpp"
#include "eqr/sweep.hpp"
#include "test_util.hpp"

using namespace eqr;

namespace {

SimConfig short_config(double t_f = 10.0) {
  SimConfig cfg;
  cfg.t_f = t_f;
  return cfg;
}

const Scenario& helix10() {
  static const Scenario s = build_scenario(short_config());
  return s;
}

InitialCondition bearing(double theta, double phi) {
  InitialCondition ic;
  ic.bearing = InitialCondition::Bearing{theta, phi};
  return ic;
}

}  // namespace

TEST(Simulator, ZeroPerturbationTracksExactly) {
  for (Controller c : {Controller::Eqr, Controller::Plqr}) {
    const SimResult r = integrate_closed_loop(helix10(), c, InitialCondition{});
    ASSERT_FALSE(r.diverged) << r.failure_reason;
    EXPECT_LT(r.max_error, 1e-6) << to_string(c);
    EXPECT_TRUE(r.converged);
  }
}

TEST(Simulator, SmallTiltDecays) {
  const DesiredPoint d0 = flat_to_state(HelixCurve{}, 0.0, Params{});
  const double th0 = std::acos(d0.state.eta.z());
  for (Controller c : {Controller::Eqr, Controller::Plqr}) {
    const SimResult r = integrate_closed_loop(helix10(), c, bearing(th0 + 0.1, 0.0));
    ASSERT_FALSE(r.diverged) << r.failure_reason;
    EXPECT_LT(r.error_norm.back(), 0.2 * r.error_norm.front()) << to_string(c);
  }
}

TEST(Simulator, EqrBeatsPlqrNearlyUpsideDown) {
  const SimResult e = integrate_closed_loop(helix10(), Controller::Eqr, bearing(3.0, 1.6));
  const SimResult p = integrate_closed_loop(helix10(), Controller::Plqr, bearing(3.0, 1.6));
  ASSERT_FALSE(e.diverged) << e.failure_reason;
  EXPECT_TRUE(p.diverged || p.rmse > e.rmse);
}

TEST(Simulator, SphereConstraintHeld) {
  const SimResult r = integrate_closed_loop(helix10(), Controller::Eqr, bearing(1.0, 2.0));
  for (const State& s : r.states) EXPECT_NEAR(s.eta.norm(), 1.0, 1e-9);
  for (const Input& u : r.inputs) EXPECT_GE(u.thrust, 0.0);
  EXPECT_EQ(r.times.size(), 10001u);
  EXPECT_DOUBLE_EQ(r.times.back(), 10.0);
}

TEST(Simulator, Deterministic) {
  const SimResult a = integrate_closed_loop(helix10(), Controller::Plqr, bearing(2.0, 0.5));
  const SimResult b = integrate_closed_loop(helix10(), Controller::Plqr, bearing(2.0, 0.5), false);
  EXPECT_EQ(a.rmse, b.rmse);
  EXPECT_EQ(a.final_error_mean, b.final_error_mean);
  EXPECT_TRUE(b.states.empty());
}

TEST(Simulator, UpsideDownStartIsHandled) {
  // theta = pi puts eta(0) at -e3; both controllers must return a result
  // (converged, diverged or singular) without throwing.
  for (Controller c : {Controller::Eqr, Controller::Plqr}) {
    SimResult r;
    EXPECT_NO_THROW(r = integrate_closed_loop(helix10(), c, bearing(M_PI, 0.0), false));
    if (r.diverged) {
      EXPECT_FALSE(r.failure_reason.empty());
    }
  }
}

TEST(Simulator, GainGridRefinement) {
  SimConfig coarse = short_config(5.0);
  coarse.dt_gain_grid = 2e-3;
  SimConfig fine = short_config(5.0);
  const Scenario a = build_scenario(coarse);
  const Scenario b = build_scenario(fine);
  const SimResult ra = integrate_closed_loop(a, Controller::Eqr, bearing(1.5, 1.0), false);
  const SimResult rb = integrate_closed_loop(b, Controller::Eqr, bearing(1.5, 1.0), false);
  EXPECT_NEAR(ra.rmse, rb.rmse, 1e-4 * rb.rmse);
}

TEST(Simulator, ConfigValidation) {
  SimConfig cfg;
  cfg.t_f = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SimConfig{};
  cfg.sweep_n_theta = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SimConfig{};
  cfg.weights.S = -Mat4::Identity();
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_NO_THROW(SimConfig{}.validate());
}

TEST(Rmse, KnownValues) {
  EXPECT_EQ(rmse(std::vector<Vec9>{}), 0.0);
  EXPECT_EQ(rmse(std::vector<Vec9>(5, Vec9::Zero())), 0.0);
  Vec9 e = Vec9::Zero();
  e(0) = 1.0;
  EXPECT_DOUBLE_EQ(rmse(std::vector<Vec9>(4, e)), 1.0);
  Vec9 f = Vec9::Zero();
  f(3) = std::sqrt(3.0);
  EXPECT_DOUBLE_EQ(rmse(std::vector<Vec9>{e, f}), std::sqrt(2.0));
  const std::vector<State> a(3, origin());
  EXPECT_EQ(rmse(a, a), 0.0);
  EXPECT_THROW(rmse(a, std::vector<State>(2, origin())), std::invalid_argument);
}

TEST(Sweep, GridConvention) {
  EXPECT_DOUBLE_EQ(sweep_theta(0, 5), 0.0);
  EXPECT_DOUBLE_EQ(sweep_theta(4, 5), M_PI);
  EXPECT_DOUBLE_EQ(sweep_phi(0, 4), 0.0);
  EXPECT_DOUBLE_EQ(sweep_phi(3, 4), 1.5 * M_PI);
}

TEST(Sweep, ParallelMatchesSerial) {
  static const Scenario s = build_scenario(short_config(3.0));
  const auto a = sweep(s, InitialCondition{}, 3, 2);
  const auto b = sweep_serial(s, InitialCondition{}, 3, 2);
  ASSERT_EQ(a.size(), 6u);
  ASSERT_EQ(b.size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].theta, b[i].theta);
    EXPECT_EQ(a[i].phi, b[i].phi);
    EXPECT_EQ(a[i].rmse_eqr, b[i].rmse_eqr);
    EXPECT_EQ(a[i].rmse_plqr, b[i].rmse_plqr);
    EXPECT_EQ(a[i].converged_eqr, b[i].converged_eqr);
    EXPECT_EQ(a[i].converged_plqr, b[i].converged_plqr);
  }
  EXPECT_DOUBLE_EQ(a[3].theta, M_PI / 2);
  EXPECT_DOUBLE_EQ(a[3].phi, M_PI);
}
