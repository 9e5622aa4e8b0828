#pragma once

#include <Eigen/Core>

#include "eqr/geometry.hpp"

namespace eqr {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat8x9 = Eigen::Matrix<double, 8, 9>;
using Mat9x8 = Eigen::Matrix<double, 9, 8>;
using Mat9x4 = Eigen::Matrix<double, 9, 4>;
using Vec4 = Eigen::Matrix<double, 4, 1>;

/// Local chart coordinates (sigma(eta), v, x).
using LocalCoords = Vec8;

/// Reduced attitude, velocity and position of the thrust vehicle.
struct State {
  Vec3 eta = Vec3::UnitZ();
  Vec3 vel = Vec3::Zero();
  Vec3 pos = Vec3::Zero();

  /// Embedded coordinates (eta, v, x) in R^9.
  Vec9 vector() const;
  static State from_vector(const Vec9& s);
};

/// Body angular velocity and collective thrust.
struct Input {
  Vec3 omega = Vec3::Zero();
  double thrust = 0.0;

  Vec4 vector() const;
  static Input from_vector(const Vec4& u);
};

struct Params {
  double mass = 1.2;
  double gravity = 9.81;
};

/// eta_3 + 1 must exceed this for the stereographic chart to be evaluated.
inline constexpr double kChartGuard = 1e-6;

/// The origin (e3, 0, 0) on which the chart is centred.
State origin();

/// Time derivative (eta x Omega, -(T/m) eta + g e3, v) stacked in R^9.
Vec9 dynamics(const State& xi, const Input& u, const Params& p);

/// Input vector field g(xi): dynamics(xi, u) - dynamics(xi, 0) = g(xi) u.
Mat9x4 input_matrix(const State& xi, const Params& p);

State act(const GroupElement& X, const State& xi);

/// Differential of xi -> act(X, xi) in embedded coordinates.
Mat9 act_state_jacobian(const GroupElement& X);

/// Differential of X -> act(X, xi) at the identity, from stacked algebra vectors.
Mat9 act_group_jacobian(const State& xi);

/// Stereographic projection from the south pole: (eta1, eta2) / (eta3 + 1).
Eigen::Vector2d stereographic(const Vec3& eta);
Vec3 stereographic_inv(const Eigen::Vector2d& s);

/// Throws ChartSingularity when eta_3 <= -1 + kChartGuard.
LocalCoords chart(const State& xi);
State chart_inv(const LocalCoords& eps);

/// Dchi at xi (8x9, acting on ambient tangent vectors).
Mat8x9 chart_jacobian(const State& xi);
/// Dchi^{-1} at eps (9x8).
Mat9x8 chart_inv_jacobian(const LocalCoords& eps);

/// Lift (-Omega^x, Omega x v - (T/m) eta + g e3, Omega x x + v).
AlgebraElement lift(const State& xi, const Input& u, const Params& p);

/// Jacobian of the stacked lift with respect to the embedded state.
Mat9 lift_state_jacobian(const State& xi, const Input& u, const Params& p);

/// Right-trivialised lifted vector field: Xdot = lifted_field(X) * X.
AlgebraElement lifted_field(const GroupElement& X, const Input& u, const Params& p,
                            const State& origin_state = origin());

/// Divides eta by its norm.
State renormalized(const State& xi);

}  // namespace eqr
