#include "eqr/lifting.hpp"

#include <cmath>
#include <stdexcept>

#include "eqr/errors.hpp"
#include "eqr/interp.hpp"

namespace eqr {

LiftedTrajectory::LiftedTrajectory(double t0, double dt, std::vector<GroupElement> elements,
                                   std::vector<Input> inputs, State origin_state)
    : t0_(t0),
      dt_(dt),
      elements_(std::move(elements)),
      inputs_(std::move(inputs)),
      origin_(std::move(origin_state)) {
  if (elements_.empty() || elements_.size() != inputs_.size()) {
    throw std::invalid_argument("LiftedTrajectory: element/input count mismatch");
  }
  increments_.reserve(elements_.size());
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i) {
    increments_.push_back(log_se23(compose(elements_[i + 1], inverse(elements_[i]))));
  }
}

LiftedTrajectory::Sample LiftedTrajectory::at(double t) const {
  const double tol = 1e-9 * dt_;
  if (t < t0_ - tol || t > tf() + tol) {
    throw OutOfRange("LiftedTrajectory::at: t outside grid");
  }
  if (elements_.size() == 1) {
    return {elements_.front(), inputs_.front()};
  }
  const double u = (t - t0_) / dt_;
  // Times that land on a node up to roundoff return the node itself.
  const double nearest = std::round(u);
  if (std::abs(u - nearest) < 1e-9) {
    const auto k = std::min(static_cast<std::size_t>(std::max(0.0, nearest)), elements_.size() - 1);
    return {elements_[k], inputs_[k]};
  }
  std::size_t i = static_cast<std::size_t>(std::max(0.0, std::floor(u)));
  i = std::min(i, elements_.size() - 2);
  const double s = std::clamp(u - static_cast<double>(i), 0.0, 1.0);
  if (s == 0.0) return {elements_[i], inputs_[i]};
  if (s == 1.0) return {elements_[i + 1], inputs_[i + 1]};
  const Input& a = inputs_[i];
  const Input& b = inputs_[i + 1];
  return {compose(exp_se23(s * increments_[i]), elements_[i]),
          {(1.0 - s) * a.omega + s * b.omega, (1.0 - s) * a.thrust + s * b.thrust}};
}

GroupElement initial_element(const State& xi_d0, const State& origin_state) {
  const Vec3 from = origin_state.eta.normalized();
  const Vec3 to = xi_d0.eta.normalized();
  const Vec3 axis = from.cross(to);
  const double sin_angle = axis.norm();
  const double cos_angle = from.dot(to);
  Rot3 R;
  if (sin_angle < 1e-12) {
    if (cos_angle > 0.0) {
      R = Rot3::Identity();
    } else {
      // Antipodal: any axis orthogonal to `from` works; use e1 projected off `from`.
      Vec3 ortho = Vec3::UnitX() - from.x() * from;
      if (ortho.norm() < 1e-6) ortho = Vec3::UnitY() - from.y() * from;
      R = exp_so3(M_PI * ortho.normalized());
    }
  } else {
    R = exp_so3(std::atan2(sin_angle, cos_angle) * axis / sin_angle);
  }
  return {R, xi_d0.vel - R * origin_state.vel, xi_d0.pos - R * origin_state.pos};
}

namespace {

AlgebraElement dexp_inv(const AlgebraElement& theta, const AlgebraElement& k) {
  const AlgebraElement b1 = bracket(theta, k);
  return k - 0.5 * b1 + (1.0 / 12.0) * bracket(theta, b1);
}

GroupElement step(const GroupElement& X, const Input& u0, const Input& u_half,
                  const Input& u1, double h, const State& o, const Params& p) {
  const AlgebraElement k1 = lifted_field(X, u0, p, o);
  const AlgebraElement th1 = 0.5 * h * k1;
  const AlgebraElement k2 = dexp_inv(th1, lifted_field(compose(exp_se23(th1), X), u_half, p, o));
  const AlgebraElement th2 = 0.5 * h * k2;
  const AlgebraElement k3 = dexp_inv(th2, lifted_field(compose(exp_se23(th2), X), u_half, p, o));
  const AlgebraElement th3 = h * k3;
  const AlgebraElement k4 = dexp_inv(th3, lifted_field(compose(exp_se23(th3), X), u1, p, o));
  const AlgebraElement theta = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return compose(exp_se23(theta), X);
}

}  // namespace

LiftedTrajectory lift_trajectory(const DesiredSchedule& desired, const State& origin_state,
                                 const Params& p) {
  if (desired.points.empty()) {
    throw std::invalid_argument("lift_trajectory: empty schedule");
  }
  return lift_trajectory(desired, origin_state, p,
                         initial_element(desired.points.front().state, origin_state));
}

LiftedTrajectory lift_trajectory(const DesiredSchedule& desired, const State& origin_state,
                                 const Params& p, const GroupElement& initial) {
  if (desired.points.empty()) {
    throw std::invalid_argument("lift_trajectory: empty schedule");
  }
  const std::size_t n = desired.points.size();
  std::vector<Vec4> inputs;
  inputs.reserve(n);
  for (const auto& d : desired.points) inputs.push_back(d.input.vector());

  std::vector<GroupElement> elements;
  elements.reserve(n);
  elements.push_back(initial);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Input u_half = Input::from_vector(cubic_midpoint(inputs, i));
    elements.push_back(step(elements.back(), desired.points[i].input, u_half,
                            desired.points[i + 1].input, desired.dt, origin_state, p));
  }
  std::vector<Input> node_inputs;
  node_inputs.reserve(n);
  for (const auto& d : desired.points) node_inputs.push_back(d.input);
  return LiftedTrajectory(desired.t0, desired.dt, std::move(elements), std::move(node_inputs),
                          origin_state);
}

double max_projection_error(const LiftedTrajectory& lifted, const DesiredSchedule& desired) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const State projected = act(lifted.elements()[i], lifted.origin_state());
    worst = std::max(worst, (projected.vector() - desired.points[i].state.vector()).norm());
  }
  return worst;
}

}  // namespace eqr
