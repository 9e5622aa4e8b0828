#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace eqr {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;

/// Rotation matrix. Kept as a plain 3x3 so it composes with Eigen expressions.
using Rot3 = Mat3;

/// Element of SE_2(3): a rotation and two translation slots (velocity, position).
struct GroupElement {
  Rot3 rotation = Rot3::Identity();
  Vec3 v_slot = Vec3::Zero();
  Vec3 x_slot = Vec3::Zero();

  static GroupElement identity() { return {}; }
};

/// Element of se_2(3). `skew` is the vee of the so(3) block.
struct AlgebraElement {
  Vec3 skew = Vec3::Zero();
  Vec3 w_v = Vec3::Zero();
  Vec3 w_x = Vec3::Zero();

  /// Stacked (skew, w_v, w_x).
  Vec9 vector() const;
  static AlgebraElement from_vector(const Vec9& u);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(double s) const;
};

inline AlgebraElement operator*(double s, const AlgebraElement& u) { return u * s; }

Mat3 hat(const Vec3& w);
Vec3 vee(const Mat3& w_hat);

Rot3 exp_so3(const Vec3& w);
/// Throws AngleNearPi when trace(R) <= -1 + 1e-9.
Vec3 log_so3(const Rot3& R);

/// Left Jacobian of SO(3) and its inverse.
Mat3 left_jacobian_so3(const Vec3& w);
Mat3 left_jacobian_inv_so3(const Vec3& w);

GroupElement compose(const GroupElement& X, const GroupElement& Y);
GroupElement inverse(const GroupElement& X);

AlgebraElement adjoint(const GroupElement& X, const AlgebraElement& U);
/// Ad_X as a 9x9 matrix acting on stacked algebra vectors.
Mat9 adjoint_matrix(const GroupElement& X);

/// Lie bracket [U, V] = UV - VU in the 5x5 representation.
AlgebraElement bracket(const AlgebraElement& U, const AlgebraElement& V);

GroupElement exp_se23(const AlgebraElement& U);
/// Inverse of exp_se23 on the principal branch; throws AngleNearPi.
AlgebraElement log_se23(const GroupElement& X);

Mat5 embed(const GroupElement& X);
Mat5 embed_alg(const AlgebraElement& U);

/// Projects a nearly orthogonal matrix onto SO(3) (polar factor).
Rot3 orthonormalize(const Mat3& M);

}  // namespace eqr
