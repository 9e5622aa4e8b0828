#include "eqr/flatness.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eqr/errors.hpp"

namespace eqr {

namespace {
constexpr double kMinThrustDirection = 1e-6;
}

FlatJet HelixCurve::jet(double t) const {
  const double c = std::cos(t);
  const double s = std::sin(t);
  FlatJet j;
  j.pos = {0.5 * c, 0.5 * s, t};
  j.vel = {-0.5 * s, 0.5 * c, 1.0};
  j.acc = {-0.5 * c, -0.5 * s, 0.0};
  j.jerk = {0.5 * s, -0.5 * c, 0.0};
  return j;
}

FlatJet HoverCurve::jet(double) const {
  FlatJet j;
  j.pos = position_;
  return j;
}

FlatJet PolynomialCurve::jet(double t) const {
  FlatJet j;
  // Horner-free accumulation; the degree is small.
  double tk = 1.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kd = static_cast<double>(k);
    j.pos += coeffs_[k] * tk;
    if (k >= 1) j.vel += kd * coeffs_[k] * std::pow(t, kd - 1.0);
    if (k >= 2) j.acc += kd * (kd - 1.0) * coeffs_[k] * std::pow(t, kd - 2.0);
    if (k >= 3) j.jerk += kd * (kd - 1.0) * (kd - 2.0) * coeffs_[k] * std::pow(t, kd - 3.0);
    tk *= t;
  }
  return j;
}

double thrust_rate(const FlatJet& jet, const Params& p) {
  const Vec3 thrust_dir = -jet.acc + p.gravity * Vec3::UnitZ();
  const double n = thrust_dir.norm();
  // d/dt (m |n|) = m n.ndot / |n| with ndot = -jerk.
  return p.mass * jet.jerk.dot(jet.acc - p.gravity * Vec3::UnitZ()) / n;
}

DesiredPoint flat_to_state(const FlatCurve& curve, double t, const Params& p) {
  const FlatJet j = curve.jet(t);
  const Vec3 thrust_dir = -j.acc + p.gravity * Vec3::UnitZ();
  const double n = thrust_dir.norm();
  if (n <= kMinThrustDirection) {
    throw FreeFallSingularity("flat_to_state: free fall at t = " + std::to_string(t), t);
  }
  const double T = p.mass * n;
  const double T_dot = thrust_rate(j, p);
  const Vec3 eta = p.mass * thrust_dir / T;
  const Vec3 eta_dot =
      p.mass * T_dot * (j.acc - p.gravity * Vec3::UnitZ()) / (T * T) - p.mass * j.jerk / T;
  const Vec3 omega = eta_dot.cross(eta) + kBeta * eta;

  DesiredPoint d;
  d.time = t;
  d.state = {eta, j.vel, j.pos};
  d.input = {omega, T};
  return d;
}

DesiredSchedule sample_trajectory(const FlatCurve& curve, double t0, double tf, double dt,
                                  const Params& p) {
  if (!(dt > 0.0) || !(tf > t0)) {
    throw std::invalid_argument("sample_trajectory: need dt > 0 and tf > t0");
  }
  const double steps = (tf - t0) / dt;
  const long n = std::lround(steps);
  if (std::abs(steps - static_cast<double>(n)) > 1e-6) {
    throw std::invalid_argument("sample_trajectory: (tf - t0) is not a multiple of dt");
  }
  DesiredSchedule s;
  s.t0 = t0;
  s.dt = dt;
  s.points.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    s.points.push_back(flat_to_state(curve, t0 + static_cast<double>(i) * dt, p));
  }
  return s;
}

}  // namespace eqr
