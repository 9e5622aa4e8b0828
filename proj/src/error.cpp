#include "eqr/error.hpp"

#include <algorithm>

#include "eqr/errors.hpp"

namespace eqr {

State error_state(const GroupElement& X_d, const State& xi) { return act(inverse(X_d), xi); }

LocalCoords local_error(const GroupElement& X_d, const State& xi) {
  return chart(error_state(X_d, xi));
}

Vec8 nonlinear_error_rate(const LocalCoords& eps, const GroupElement& X_d, const State& xi_d,
                          const Input& u_d, const Input& u_tilde, const Params& p) {
  const State xi_e = chart_inv(eps);
  const State xi = act(X_d, xi_e);
  const GroupElement X_inv = inverse(X_d);
  const AlgebraElement drift = adjoint(X_inv, lift(xi, u_d, p) - lift(xi_d, u_d, p));
  // Pushforward of g by act(X_d^{-1}, .), evaluated at xi_e.
  const Vec9 forced = act_state_jacobian(X_inv) * input_matrix(xi, p) * u_tilde.vector();
  const Vec9 xi_e_dot = act_group_jacobian(xi_e) * drift.vector() + forced;
  return chart_jacobian(xi_e) * xi_e_dot;
}

LinearizationPair linearize_generic(const GroupElement& X_d, const State& xi_d,
                                    const Input& u_d, const Params& p) {
  const State o = origin();
  const GroupElement X_inv = inverse(X_d);
  const Mat8x9 dchi = chart_jacobian(o);
  const Mat9x8 dchi_inv = chart_inv_jacobian(LocalCoords::Zero());

  LinearizationPair lin;
  lin.A = dchi * act_group_jacobian(o) * adjoint_matrix(X_inv) * lift_state_jacobian(xi_d, u_d, p) *
          act_state_jacobian(X_d) * dchi_inv;
  lin.B = dchi * act_state_jacobian(X_inv) * input_matrix(xi_d, p);
  return lin;
}

LinearizationPair linearize_closed_form(const Vec3& omega_d, double thrust_d, const Params& p) {
  const Mat3 W = hat(omega_d);
  LinearizationPair lin;
  lin.A.block<3, 2>(2, 0) << -2.0 * thrust_d / p.mass, 0.0, 0.0, -2.0 * thrust_d / p.mass, 0.0, 0.0;
  lin.A.block<3, 3>(2, 2) = W;
  lin.A.block<3, 3>(5, 2) = Mat3::Identity();
  lin.A.block<3, 3>(5, 5) = W;
  lin.B.block<2, 3>(0, 0) << 0.0, -0.5, 0.0, 0.5, 0.0, 0.0;
  lin.B(4, 3) = -1.0 / p.mass;
  return lin;
}

LinearizationPair numeric_linearization(const GroupElement& X_d, const State& xi_d,
                                        const Input& u_d, const Params& p, double h) {
  LinearizationPair lin;
  const Input zero_u{Vec3::Zero(), 0.0};
  for (int j = 0; j < 8; ++j) {
    LocalCoords e = LocalCoords::Zero();
    e(j) = h;
    lin.A.col(j) = (nonlinear_error_rate(e, X_d, xi_d, u_d, zero_u, p) -
                    nonlinear_error_rate(-e, X_d, xi_d, u_d, zero_u, p)) /
                   (2.0 * h);
  }
  for (int j = 0; j < 4; ++j) {
    Vec4 du = Vec4::Zero();
    du(j) = h;
    lin.B.col(j) = (nonlinear_error_rate(LocalCoords::Zero(), X_d, xi_d, u_d, Input::from_vector(du), p) -
                    nonlinear_error_rate(LocalCoords::Zero(), X_d, xi_d, u_d, Input::from_vector(-du), p)) /
                   (2.0 * h);
  }
  return lin;
}

double relative_difference(const LinearizationPair& a, const LinearizationPair& b) {
  Eigen::Matrix<double, 8, 12> ma;
  Eigen::Matrix<double, 8, 12> mb;
  ma << a.A, a.B;
  mb << b.A, b.B;
  return (ma - mb).norm() / std::max(mb.norm(), 1e-300);
}

std::vector<LinearizationPair> linearize_schedule(const LiftedTrajectory& lifted,
                                                  const Params& p) {
  const long n = static_cast<long>(lifted.size());
  std::vector<LinearizationPair> out(static_cast<std::size_t>(n));
  const State o = lifted.origin_state();
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const GroupElement& X = lifted.elements()[k];
    out[k] = linearize_generic(X, act(X, o), lifted.inputs()[k], p);
    out[k].time = lifted.time(k);
  }
  return out;
}

std::vector<LinearizationPair> linearize_schedule_serial(const LiftedTrajectory& lifted,
                                                         const Params& p) {
  std::vector<LinearizationPair> out;
  out.reserve(lifted.size());
  const State o = lifted.origin_state();
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    const GroupElement& X = lifted.elements()[k];
    out.push_back(linearize_generic(X, act(X, o), lifted.inputs()[k], p));
    out.back().time = lifted.time(k);
  }
  return out;
}

}  // namespace eqr
