#include "eqr/geometry.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "eqr/errors.hpp"

namespace eqr {

namespace {
constexpr double kSmallAngle = 1e-6;
constexpr double kNearPiTrace = 1e-9;
}  // namespace

Vec9 AlgebraElement::vector() const {
  Vec9 u;
  u << skew, w_v, w_x;
  return u;
}

AlgebraElement AlgebraElement::from_vector(const Vec9& u) {
  return {u.segment<3>(0), u.segment<3>(3), u.segment<3>(6)};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  return {skew + o.skew, w_v + o.w_v, w_x + o.w_x};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return {skew - o.skew, w_v - o.w_v, w_x - o.w_x};
}

AlgebraElement AlgebraElement::operator*(double s) const { return {s * skew, s * w_v, s * w_x}; }

Mat3 hat(const Vec3& w) {
  Mat3 m;
  // clang-format off
  m <<    0.0, -w.z(),  w.y(),
        w.z(),    0.0, -w.x(),
       -w.y(),  w.x(),    0.0;
  // clang-format on
  return m;
}

Vec3 vee(const Mat3& w_hat) { return {w_hat(2, 1), w_hat(0, 2), w_hat(1, 0)}; }

Rot3 exp_so3(const Vec3& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 W = hat(w);
  double a;
  double b;
  if (theta < kSmallAngle) {
    a = 1.0 - theta2 / 6.0;
    b = 0.5 - theta2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  return Mat3::Identity() + a * W + b * W * W;
}

Vec3 log_so3(const Rot3& R) {
  const double tr = R.trace();
  if (tr <= -1.0 + kNearPiTrace) {
    throw AngleNearPi("log_so3: rotation angle too close to pi");
  }
  const double cos_theta = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
  const double theta = std::acos(cos_theta);
  const Vec3 skew_part = 0.5 * vee(R - R.transpose());
  if (theta < kSmallAngle) {
    return (1.0 + theta * theta / 6.0) * skew_part;
  }
  if (theta < 0.75 * M_PI) {
    return theta / std::sin(theta) * skew_part;
  }
  // Close to pi the skew part vanishes; recover the axis from the symmetric part.
  const Mat3 S = 0.5 * (R + R.transpose()) - cos_theta * Mat3::Identity();
  int k;
  S.diagonal().maxCoeff(&k);
  Vec3 axis = S.col(k) / std::sqrt(S(k, k));
  axis.normalize();
  if (axis.dot(skew_part) < 0.0) {
    axis = -axis;
  }
  return theta * axis;
}

Mat3 left_jacobian_so3(const Vec3& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 W = hat(w);
  double a;
  double b;
  if (theta < kSmallAngle) {
    a = 0.5 - theta2 / 24.0;
    b = 1.0 / 6.0 - theta2 / 120.0;
  } else {
    a = (1.0 - std::cos(theta)) / theta2;
    b = (theta - std::sin(theta)) / (theta2 * theta);
  }
  return Mat3::Identity() + a * W + b * W * W;
}

Mat3 left_jacobian_inv_so3(const Vec3& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 W = hat(w);
  double c;
  if (theta < kSmallAngle) {
    c = 1.0 / 12.0 + theta2 / 720.0;
  } else {
    c = 1.0 / theta2 - (1.0 + std::cos(theta)) / (2.0 * theta * std::sin(theta));
  }
  return Mat3::Identity() - 0.5 * W + c * W * W;
}

GroupElement compose(const GroupElement& X, const GroupElement& Y) {
  return {X.rotation * Y.rotation, X.rotation * Y.v_slot + X.v_slot,
          X.rotation * Y.x_slot + X.x_slot};
}

GroupElement inverse(const GroupElement& X) {
  const Mat3 Rt = X.rotation.transpose();
  return {Rt, -Rt * X.v_slot, -Rt * X.x_slot};
}

AlgebraElement adjoint(const GroupElement& X, const AlgebraElement& U) {
  const Vec3 Rw = X.rotation * U.skew;
  return {Rw, X.rotation * U.w_v + X.v_slot.cross(Rw), X.rotation * U.w_x + X.x_slot.cross(Rw)};
}

Mat9 adjoint_matrix(const GroupElement& X) {
  const Mat3& R = X.rotation;
  Mat9 ad = Mat9::Zero();
  ad.block<3, 3>(0, 0) = R;
  ad.block<3, 3>(3, 0) = hat(X.v_slot) * R;
  ad.block<3, 3>(3, 3) = R;
  ad.block<3, 3>(6, 0) = hat(X.x_slot) * R;
  ad.block<3, 3>(6, 6) = R;
  return ad;
}

AlgebraElement bracket(const AlgebraElement& U, const AlgebraElement& V) {
  return {U.skew.cross(V.skew), U.skew.cross(V.w_v) - V.skew.cross(U.w_v),
          U.skew.cross(V.w_x) - V.skew.cross(U.w_x)};
}

GroupElement exp_se23(const AlgebraElement& U) {
  const Mat3 J = left_jacobian_so3(U.skew);
  return {exp_so3(U.skew), J * U.w_v, J * U.w_x};
}

AlgebraElement log_se23(const GroupElement& X) {
  const Vec3 w = log_so3(X.rotation);
  const Mat3 Jinv = left_jacobian_inv_so3(w);
  return {w, Jinv * X.v_slot, Jinv * X.x_slot};
}

Mat5 embed(const GroupElement& X) {
  Mat5 m = Mat5::Identity();
  m.block<3, 3>(0, 0) = X.rotation;
  m.block<3, 1>(0, 3) = X.v_slot;
  m.block<3, 1>(0, 4) = X.x_slot;
  return m;
}

Mat5 embed_alg(const AlgebraElement& U) {
  Mat5 m = Mat5::Zero();
  m.block<3, 3>(0, 0) = hat(U.skew);
  m.block<3, 1>(0, 3) = U.w_v;
  m.block<3, 1>(0, 4) = U.w_x;
  return m;
}

Rot3 orthonormalize(const Mat3& M) {
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 D = Mat3::Identity();
  D(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  return svd.matrixU() * D * svd.matrixV().transpose();
}

}  // namespace eqr
