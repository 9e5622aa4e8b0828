#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "eqr/errors.hpp"
#include "eqr/lqr.hpp"
#include "test_util.hpp"

using namespace eqr;
using eqr::testing::Sampler;

namespace {

GainSchedule constant_riccati(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                              const Eigen::MatrixXd& Q, const Eigen::MatrixXd& F, const Mat4& S,
                              double tf, double dt) {
  const auto n = static_cast<std::size_t>(std::lround(tf / dt)) + 1;
  return solve_riccati(std::vector<Eigen::MatrixXd>(n, A), std::vector<Eigen::MatrixXd>(n, B),
                       std::vector<Eigen::MatrixXd>(n, Q), F, S, 0.0, dt);
}

}  // namespace

TEST(Weights, PaperDefaults) {
  const WeightSet w = WeightSet::paper_defaults();
  EXPECT_DOUBLE_EQ(w.Q(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(w.Q(4, 4), 2.0);
  EXPECT_DOUBLE_EQ(w.F(8, 8), 0.1);
  EXPECT_EQ(w.S, 0.5 * Mat4::Identity());
  EXPECT_NO_THROW(w.validate());
  WeightSet bad = w;
  bad.S(0, 0) = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = w;
  bad.Q(0, 1) = 0.3;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = w;
  bad.F(2, 2) = -1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(TransformWeights, IdentityElement) {
  const Mat8 q = transform_weights(Mat9::Identity(), GroupElement::identity());
  Vec8 d;
  d << 4, 4, 1, 1, 1, 1, 1, 1;
  EXPECT_LT((q - Mat8(d.asDiagonal())).norm(), 1e-14);
  EXPECT_EQ(transform_weights(Mat9::Zero(), GroupElement::identity()), Mat8::Zero());
}

TEST(TransformWeights, IsotropicInvariance) {
  Sampler s(31);
  Vec9 d;
  d << 3, 3, 3, 2, 2, 2, 0.5, 0.5, 0.5;
  const Mat9 W = d.asDiagonal();
  const Mat8 ref = transform_weights(W, GroupElement::identity());
  for (int k = 0; k < eqr::testing::kReps; ++k) {
    const Mat8 q = transform_weights(W, s.group());
    EXPECT_LT((q - ref).norm(), 1e-12);
    EXPECT_LT((q - q.transpose()).norm(), 1e-15);
  }
}

TEST(TransformWeights, PositiveSemidefinite) {
  Sampler s(32);
  const Mat9 W = WeightSet::paper_defaults().Q;
  for (int k = 0; k < eqr::testing::kReps; ++k) {
    Eigen::SelfAdjointEigenSolver<Mat8> es(transform_weights(W, s.group()));
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(Riccati, ScalarConvergesToAlgebraicSolution) {
  // a = 0, b = 1, q = 1, s = 1 -> P = 1 far from tf.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(1, 4);
  B(0, 0) = 1.0;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Ones(1, 1);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(1, 1);
  const GainSchedule g = constant_riccati(A, B, Q, F, Mat4::Identity(), 10.0, 0.01);
  EXPECT_NEAR(g.P.front()(0, 0), 1.0, 1e-8);
  EXPECT_EQ(g.P.back()(0, 0), 0.0);
  // Exact solution tanh(tf - t).
  for (std::size_t i = 0; i < g.size(); i += 97) {
    const double t = 0.01 * static_cast<double>(i);
    EXPECT_NEAR(g.P[i](0, 0), std::tanh(10.0 - t), 1e-9);
  }
  EXPECT_NEAR(g.K.front()(0, 0), 1.0, 1e-8);
}

TEST(Riccati, TerminalAndSymmetry) {
  const Params p;
  const LinearizationPair lin = linearize_closed_form(Vec3(0.2, 0.1, -0.3), 11.0, p);
  const WeightSet w = WeightSet::paper_defaults();
  const Mat8 Q = transform_weights(w.Q, GroupElement::identity());
  const GainSchedule g = constant_riccati(lin.A, lin.B, Q, Q, w.S, 5.0, 0.01);
  EXPECT_EQ(g.P.back(), Eigen::MatrixXd(Q));
  for (const auto& P : g.P) {
    EXPECT_EQ(P, P.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
  }
  EXPECT_EQ(g.K.front().rows(), 4);
  EXPECT_EQ(g.K.front().cols(), 8);
}

TEST(Riccati, HoverReachesCareAndStabilises) {
  const Params p;
  const LinearizationPair lin = linearize_closed_form(Vec3::Zero(), p.mass * p.gravity, p);
  const WeightSet w = WeightSet::paper_defaults();
  const Mat8 Q = transform_weights(w.Q, GroupElement::identity());
  const GainSchedule g = constant_riccati(lin.A, lin.B, Q, Q, w.S, 30.0, 0.01);
  const Eigen::MatrixXd& P = g.P.front();
  const Eigen::MatrixXd residual = lin.A.transpose() * P + P * lin.A -
                                   P * lin.B * w.S.inverse() * lin.B.transpose() * P + Eigen::MatrixXd(Q);
  EXPECT_LT(residual.norm(), 1e-6 * P.norm());
  const Eigen::MatrixXd closed = lin.A - lin.B * g.K.front();
  Eigen::EigenSolver<Eigen::MatrixXd> es(closed);
  EXPECT_LT(es.eigenvalues().real().maxCoeff(), -1e-3);
}

TEST(Riccati, GridRefinementOnHelix) {
  const Params p;
  auto p0 = [&](double dt) {
    const DesiredSchedule d = sample_trajectory(HelixCurve{}, 0.0, 4.0, dt, p);
    const LiftedTrajectory l = lift_trajectory(d, origin(), p);
    return eqr_gains(l, WeightSet::paper_defaults(), p).P.front();
  };
  const Eigen::MatrixXd a = p0(0.02);
  const Eigen::MatrixXd b = p0(0.01);
  const Eigen::MatrixXd c = p0(0.005);
  EXPECT_LT((b - c).norm(), 1e-5 * c.norm());
  EXPECT_LT((b - c).norm(), (a - b).norm());
}

TEST(Riccati, BlowupIsReported) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(1, 4);
  B(0, 0) = 1.0;
  // Negative "cost" drives P to a finite-time escape.
  Eigen::MatrixXd Q = -Eigen::MatrixXd::Ones(1, 1);
  Eigen::MatrixXd F = -Eigen::MatrixXd::Ones(1, 1);
  EXPECT_THROW(constant_riccati(A, B, Q, F, Mat4::Identity(), 5.0, 0.01), RiccatiBlowup);
  EXPECT_THROW(solve_riccati({}, {}, {}, F, Mat4::Identity(), 0.0, 0.1), std::invalid_argument);
}

TEST(GainAt, InterpolatesAndRejectsOutOfRange) {
  GainSchedule g;
  g.t0 = 1.0;
  g.dt = 0.5;
  g.K = {Eigen::MatrixXd::Zero(4, 8), Eigen::MatrixXd::Ones(4, 8), 3 * Eigen::MatrixXd::Ones(4, 8)};
  EXPECT_EQ(gain_at(g, 1.0), g.K[0]);
  EXPECT_EQ(gain_at(g, 1.5), g.K[1]);
  EXPECT_EQ(gain_at(g, 2.0), g.K[2]);
  EXPECT_NEAR(gain_at(g, 1.25)(2, 3), 0.5, 1e-15);
  EXPECT_NEAR(gain_at(g, 1.75)(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(eqr_gain_at(g, 1.75)(3, 7), 2.0, 1e-15);
  EXPECT_THROW(gain_at(g, 0.99), OutOfRange);
  EXPECT_THROW(gain_at(g, 2.01), OutOfRange);
  EXPECT_THROW(eqr_gain_at(g, 2.01), OutOfRange);
}

TEST(EqrGains, NoBlowupOnHelix) {
  const Params p;
  const DesiredSchedule d = sample_trajectory(HelixCurve{}, 0.0, 10.0, 0.01, p);
  const LiftedTrajectory l = lift_trajectory(d, origin(), p);
  const GainSchedule g = eqr_gains(l, WeightSet::paper_defaults(), p);
  ASSERT_EQ(g.size(), l.size());
  for (const auto& P : g.P) {
    ASSERT_TRUE(P.allFinite());
    EXPECT_LT(P.norm(), 1e4);
  }
}
