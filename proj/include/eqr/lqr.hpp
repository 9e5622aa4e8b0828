#pragma once

#include <Eigen/Core>
#include <vector>

#include "eqr/error.hpp"
#include "eqr/geometry.hpp"
#include "eqr/lifting.hpp"

namespace eqr {

using Mat4 = Eigen::Matrix4d;

/// LQR weights expressed in embedded (eta, v, x) coordinates.
struct WeightSet {
  Mat9 F = Mat9::Identity();
  Mat9 Q = Mat9::Identity();
  Mat4 S = Mat4::Identity();

  /// F = Q = diag(1,1,1, 2,2,2, 0.1,0.1,0.1), S = 0.5 I.
  static WeightSet paper_defaults();
  /// Throws std::invalid_argument on asymmetric or indefinite weights.
  void validate() const;
};

/// Time-gridded feedback gains K (4 x n) and Riccati solutions P (n x n).
struct GainSchedule {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Eigen::MatrixXd> K;
  std::vector<Eigen::MatrixXd> P;

  std::size_t size() const { return K.size(); }
  double tf() const { return t0 + dt * static_cast<double>(K.size() - 1); }
};

/// Norm bound on P beyond which the backward sweep is declared blown up.
inline constexpr double kRiccatiBlowup = 1e12;

/// Pulls an embedded 9x9 weight back to chart coordinates at the origin,
/// (Dchi^{-1})^T Dphi_X^T W Dphi_X Dchi^{-1}.
Mat8 transform_weights(const Mat9& W, const GroupElement& X_d);

/// Backward RK4 sweep of Pdot = -A^T P - P A + P B S^{-1} B^T P - Q from
/// P(tf) = F over the node grid. Coefficients at half steps come from
/// cubic interpolation of the node values. P is symmetrised at every node.
GainSchedule solve_riccati(const std::vector<Eigen::MatrixXd>& A,
                           const std::vector<Eigen::MatrixXd>& B,
                           const std::vector<Eigen::MatrixXd>& Q, const Eigen::MatrixXd& F,
                           const Mat4& S, double t0, double dt);

/// Linear interpolation of K. Throws OutOfRange outside the grid.
Eigen::MatrixXd gain_at(const GainSchedule& schedule, double t);

/// Allocation-free variant of gain_at for the fixed EqR size.
Eigen::Matrix<double, 4, 8> eqr_gain_at(const GainSchedule& schedule, double t);

/// Full EqR design on a lifted trajectory: linearize, transform weights, solve.
GainSchedule eqr_gains(const LiftedTrajectory& lifted, const WeightSet& weights,
                       const Params& p);

}  // namespace eqr
