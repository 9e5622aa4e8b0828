#pragma once

#include <utility>

#include "eqr/flatness.hpp"
#include "eqr/lqr.hpp"

namespace eqr {

/// blkdiag(I - eta_d eta_d^T, I, I).
Mat9 projector(const Vec3& eta_d);

/// (eta - eta_d, v - v_d, x - x_d).
Vec9 embedded_error(const State& xi, const State& xi_d);

struct PlqrLinearization {
  Mat9 A = Mat9::Zero();
  Mat9x4 B = Mat9x4::Zero();
};

/// Linearization of the embedded error with the state direction projected
/// onto the tangent space of the desired bearing.
PlqrLinearization linearize_plqr(const State& xi_d, const Input& u_d, const Params& p);

/// 9-state gains with projected weights P Q P along the schedule and P F P at tf.
GainSchedule plqr_gains(const DesiredSchedule& desired, const WeightSet& weights,
                        const Params& p);

/// u = u_d - K P (xi - xi_d), thrust clamped at zero.
Input plqr_control(const State& xi, const DesiredPoint& desired, const Eigen::MatrixXd& K);

}  // namespace eqr
