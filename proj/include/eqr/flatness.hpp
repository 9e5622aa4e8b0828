#pragma once

#include <memory>
#include <vector>

#include "eqr/vehicle.hpp"

namespace eqr {

/// Position and its first three time derivatives at one instant.
struct FlatJet {
  Vec3 pos = Vec3::Zero();
  Vec3 vel = Vec3::Zero();
  Vec3 acc = Vec3::Zero();
  Vec3 jerk = Vec3::Zero();
};

/// A C^3 position curve x_d(t) with analytic derivatives.
class FlatCurve {
 public:
  virtual ~FlatCurve() = default;
  virtual FlatJet jet(double t) const = 0;
};

/// x_d(t) = (cos(t)/2, sin(t)/2, t).
class HelixCurve final : public FlatCurve {
 public:
  FlatJet jet(double t) const override;
};

/// Stationary point.
class HoverCurve final : public FlatCurve {
 public:
  explicit HoverCurve(const Vec3& position = Vec3::Zero()) : position_(position) {}
  FlatJet jet(double t) const override;

 private:
  Vec3 position_;
};

/// Per-axis polynomial; coeffs[k] multiplies t^k.
class PolynomialCurve final : public FlatCurve {
 public:
  explicit PolynomialCurve(std::vector<Vec3> coeffs) : coeffs_(std::move(coeffs)) {}
  FlatJet jet(double t) const override;

 private:
  std::vector<Vec3> coeffs_;
};

struct DesiredPoint {
  double time = 0.0;
  State state;
  Input input;
};

/// Uniformly gridded desired trajectory. points[i].time == t0 + i * dt.
struct DesiredSchedule {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<DesiredPoint> points;

  double tf() const { return t0 + dt * static_cast<double>(points.size() - 1); }
};

/// Free function for the yaw-like freedom in Omega_d; fixed at zero.
inline constexpr double kBeta = 0.0;

/// Full desired state and input from the flat output at time t.
/// Throws FreeFallSingularity when |-a + g e3| <= 1e-6.
DesiredPoint flat_to_state(const FlatCurve& curve, double t, const Params& p);

/// Rate of the thrust magnitude along the curve.
double thrust_rate(const FlatJet& jet, const Params& p);

/// Samples [t0, tf] inclusive on a uniform grid of spacing dt.
DesiredSchedule sample_trajectory(const FlatCurve& curve, double t0, double tf, double dt,
                                  const Params& p);

}  // namespace eqr
