#include "eqr/plqr.hpp"

#include <algorithm>

namespace eqr {

Mat9 projector(const Vec3& eta_d) {
  Mat9 P = Mat9::Identity();
  P.block<3, 3>(0, 0) -= eta_d * eta_d.transpose();
  return P;
}

Vec9 embedded_error(const State& xi, const State& xi_d) { return xi.vector() - xi_d.vector(); }

PlqrLinearization linearize_plqr(const State& xi_d, const Input& u_d, const Params& p) {
  const Mat3 tangent = Mat3::Identity() - xi_d.eta * xi_d.eta.transpose();
  PlqrLinearization lin;
  // d(eta x Omega)/d eta = -Omega^, restricted to the tangent plane.
  lin.A.block<3, 3>(0, 0) = -hat(u_d.omega) * tangent;
  lin.A.block<3, 3>(3, 0) = -(u_d.thrust / p.mass) * tangent;
  lin.A.block<3, 3>(6, 3) = Mat3::Identity();
  lin.B.block<3, 3>(0, 0) = hat(xi_d.eta);
  lin.B.block<3, 1>(3, 3) = -xi_d.eta / p.mass;
  return lin;
}

GainSchedule plqr_gains(const DesiredSchedule& desired, const WeightSet& weights,
                        const Params& p) {
  weights.validate();
  const std::size_t n = desired.points.size();
  std::vector<Eigen::MatrixXd> A;
  std::vector<Eigen::MatrixXd> B;
  std::vector<Eigen::MatrixXd> Q;
  A.reserve(n);
  B.reserve(n);
  Q.reserve(n);
  for (const DesiredPoint& d : desired.points) {
    const PlqrLinearization lin = linearize_plqr(d.state, d.input, p);
    const Mat9 proj = projector(d.state.eta);
    A.emplace_back(lin.A);
    B.emplace_back(lin.B);
    Q.emplace_back(proj * weights.Q * proj);
  }
  const Mat9 proj_f = projector(desired.points.back().state.eta);
  const Eigen::MatrixXd F = proj_f * weights.F * proj_f;
  return solve_riccati(A, B, Q, F, weights.S, desired.t0, desired.dt);
}

Input plqr_control(const State& xi, const DesiredPoint& desired, const Eigen::MatrixXd& K) {
  const Vec9 err = projector(desired.state.eta) * embedded_error(xi, desired.state);
  const Vec4 u = desired.input.vector() - K * err;
  return {u.head<3>(), std::max(0.0, u(3))};
}

}  // namespace eqr
