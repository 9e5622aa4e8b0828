#include "eqr/vehicle.hpp"

#include <cmath>
#include <string>

#include "eqr/errors.hpp"

namespace eqr {

Vec9 State::vector() const {
  Vec9 s;
  s << eta, vel, pos;
  return s;
}

State State::from_vector(const Vec9& s) { return {s.segment<3>(0), s.segment<3>(3), s.segment<3>(6)}; }

Vec4 Input::vector() const {
  Vec4 u;
  u << omega, thrust;
  return u;
}

Input Input::from_vector(const Vec4& u) { return {u.head<3>(), u(3)}; }

State origin() { return {Vec3::UnitZ(), Vec3::Zero(), Vec3::Zero()}; }

Vec9 dynamics(const State& xi, const Input& u, const Params& p) {
  Vec9 rate;
  rate << xi.eta.cross(u.omega), -(u.thrust / p.mass) * xi.eta + p.gravity * Vec3::UnitZ(), xi.vel;
  return rate;
}

Mat9x4 input_matrix(const State& xi, const Params& p) {
  Mat9x4 g = Mat9x4::Zero();
  g.block<3, 3>(0, 0) = hat(xi.eta);
  g.block<3, 1>(3, 3) = -xi.eta / p.mass;
  return g;
}

State act(const GroupElement& X, const State& xi) {
  return {X.rotation * xi.eta, X.rotation * xi.vel + X.v_slot, X.rotation * xi.pos + X.x_slot};
}

Mat9 act_state_jacobian(const GroupElement& X) {
  Mat9 d = Mat9::Zero();
  for (int k = 0; k < 3; ++k) {
    d.block<3, 3>(3 * k, 3 * k) = X.rotation;
  }
  return d;
}

Mat9 act_group_jacobian(const State& xi) {
  // (W eta, W v + w_v, W x + w_x) with W = hat(w), written as linear in (w, w_v, w_x).
  Mat9 d = Mat9::Zero();
  d.block<3, 3>(0, 0) = -hat(xi.eta);
  d.block<3, 3>(3, 0) = -hat(xi.vel);
  d.block<3, 3>(3, 3) = Mat3::Identity();
  d.block<3, 3>(6, 0) = -hat(xi.pos);
  d.block<3, 3>(6, 6) = Mat3::Identity();
  return d;
}

Eigen::Vector2d stereographic(const Vec3& eta) {
  const double denom = eta.z() + 1.0;
  return {eta.x() / denom, eta.y() / denom};
}

Vec3 stereographic_inv(const Eigen::Vector2d& s) {
  const double r2 = s.squaredNorm();
  return Vec3(2.0 * s.x(), 2.0 * s.y(), 1.0 - r2) / (1.0 + r2);
}

LocalCoords chart(const State& xi) {
  if (xi.eta.z() <= -1.0 + kChartGuard) {
    throw ChartSingularity("chart: eta too close to -e3 (eta_3 = " + std::to_string(xi.eta.z()) + ")");
  }
  LocalCoords eps;
  eps << stereographic(xi.eta), xi.vel, xi.pos;
  return eps;
}

State chart_inv(const LocalCoords& eps) {
  return {stereographic_inv(eps.head<2>()), eps.segment<3>(2), eps.segment<3>(5)};
}

Mat8x9 chart_jacobian(const State& xi) {
  const double d = xi.eta.z() + 1.0;
  Mat8x9 J = Mat8x9::Zero();
  J(0, 0) = 1.0 / d;
  J(0, 2) = -xi.eta.x() / (d * d);
  J(1, 1) = 1.0 / d;
  J(1, 2) = -xi.eta.y() / (d * d);
  J.block<3, 3>(2, 3) = Mat3::Identity();
  J.block<3, 3>(5, 6) = Mat3::Identity();
  return J;
}

Mat9x8 chart_inv_jacobian(const LocalCoords& eps) {
  const double s1 = eps(0);
  const double s2 = eps(1);
  const double d = 1.0 + s1 * s1 + s2 * s2;
  const double d2 = d * d;
  Mat9x8 J = Mat9x8::Zero();
  J(0, 0) = (2.0 * d - 4.0 * s1 * s1) / d2;
  J(0, 1) = -4.0 * s1 * s2 / d2;
  J(1, 0) = -4.0 * s1 * s2 / d2;
  J(1, 1) = (2.0 * d - 4.0 * s2 * s2) / d2;
  J(2, 0) = -4.0 * s1 / d2;
  J(2, 1) = -4.0 * s2 / d2;
  J.block<3, 3>(3, 2) = Mat3::Identity();
  J.block<3, 3>(6, 5) = Mat3::Identity();
  return J;
}

AlgebraElement lift(const State& xi, const Input& u, const Params& p) {
  return {-u.omega,
          u.omega.cross(xi.vel) - (u.thrust / p.mass) * xi.eta + p.gravity * Vec3::UnitZ(),
          u.omega.cross(xi.pos) + xi.vel};
}

Mat9 lift_state_jacobian(const State&, const Input& u, const Params& p) {
  const Mat3 W = hat(u.omega);
  Mat9 d = Mat9::Zero();
  d.block<3, 3>(3, 0) = -(u.thrust / p.mass) * Mat3::Identity();
  d.block<3, 3>(3, 3) = W;
  d.block<3, 3>(6, 3) = Mat3::Identity();
  d.block<3, 3>(6, 6) = W;
  return d;
}

AlgebraElement lifted_field(const GroupElement& X, const Input& u, const Params& p,
                            const State& origin_state) {
  return lift(act(X, origin_state), u, p);
}

State renormalized(const State& xi) { return {xi.eta.normalized(), xi.vel, xi.pos}; }

}  // namespace eqr
