#pragma once

#include <vector>

#include "eqr/flatness.hpp"
#include "eqr/geometry.hpp"
#include "eqr/vehicle.hpp"

namespace eqr {

/// Group-valued trajectory X_d(t) on a uniform grid together with the inputs
/// that generated it. Immutable after construction.
class LiftedTrajectory {
 public:
  LiftedTrajectory(double t0, double dt, std::vector<GroupElement> elements,
                   std::vector<Input> inputs, State origin_state);

  double t0() const { return t0_; }
  double dt() const { return dt_; }
  double tf() const { return t0_ + dt_ * static_cast<double>(elements_.size() - 1); }
  std::size_t size() const { return elements_.size(); }
  double time(std::size_t i) const { return t0_ + dt_ * static_cast<double>(i); }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<Input>& inputs() const { return inputs_; }
  const State& origin_state() const { return origin_; }

  struct Sample {
    GroupElement element;
    Input input;
  };

  /// Geodesic interpolation of the group element, linear for the input.
  /// Throws OutOfRange outside [t0, tf].
  Sample at(double t) const;

 private:
  double t0_;
  double dt_;
  std::vector<GroupElement> elements_;
  std::vector<Input> inputs_;
  std::vector<AlgebraElement> increments_;  // log(X_{i+1} X_i^{-1})
  State origin_;
};

/// X with act(X, origin) = xi_d0, built from the minimal rotation taking the
/// origin bearing to eta_d0 (axis e1 for the antipodal case).
GroupElement initial_element(const State& xi_d0, const State& origin_state = origin());

/// Integrates Xdot = Lambda(act(X, origin), u_d) X with a 4th-order
/// Runge-Kutta-Munthe-Kaas scheme on the schedule grid.
LiftedTrajectory lift_trajectory(const DesiredSchedule& desired,
                                 const State& origin_state, const Params& p);

/// Same, starting from a caller-chosen X_d(0) (any element of the coset
/// initial_element(xi_d(0)) * stab(origin) projects correctly).
LiftedTrajectory lift_trajectory(const DesiredSchedule& desired, const State& origin_state,
                                 const Params& p, const GroupElement& initial);

/// Largest embedded-coordinate distance between act(X_d(t_i), origin) and xi_d(t_i).
double max_projection_error(const LiftedTrajectory& lifted, const DesiredSchedule& desired);

}  // namespace eqr
