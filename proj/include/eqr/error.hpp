#pragma once

#include <vector>

#include "eqr/lifting.hpp"
#include "eqr/vehicle.hpp"

namespace eqr {

using Mat8x4 = Eigen::Matrix<double, 8, 4>;

/// Local error dynamics eps_dot ~= A eps + B u_tilde at one instant.
struct LinearizationPair {
  Mat8 A = Mat8::Zero();
  Mat8x4 B = Mat8x4::Zero();
  double time = 0.0;
};

/// xi_e = act(X_d^{-1}, xi).
State error_state(const GroupElement& X_d, const State& xi);

/// eps = chart(xi_e). Propagates ChartSingularity.
LocalCoords local_error(const GroupElement& X_d, const State& xi);

/// Exact time derivative of eps, assembled from the error dynamics on the
/// manifold pushed through the chart.
Vec8 nonlinear_error_rate(const LocalCoords& eps, const GroupElement& X_d, const State& xi_d,
                          const Input& u_d, const Input& u_tilde, const Params& p);

/// Analytic linearization about (eps, u_tilde) = (0, 0).
LinearizationPair linearize_generic(const GroupElement& X_d, const State& xi_d,
                                    const Input& u_d, const Params& p);

/// Reference closed form with a constant-structure B and Omega_d entering
/// the velocity and position blocks directly.
LinearizationPair linearize_closed_form(const Vec3& omega_d, double thrust_d, const Params& p);

/// Central-difference Jacobian of nonlinear_error_rate at (0, 0) with step h.
LinearizationPair numeric_linearization(const GroupElement& X_d, const State& xi_d,
                                        const Input& u_d, const Params& p, double h = 1e-5);

/// |[A B]_a - [A B]_b|_F / |[A B]_b|_F.
double relative_difference(const LinearizationPair& a, const LinearizationPair& b);

/// linearize_generic at every node of a lifted trajectory (OpenMP parallel).
std::vector<LinearizationPair> linearize_schedule(const LiftedTrajectory& lifted,
                                                  const Params& p);
/// Single-threaded reference for linearize_schedule.
std::vector<LinearizationPair> linearize_schedule_serial(const LiftedTrajectory& lifted,
                                                         const Params& p);

}  // namespace eqr
