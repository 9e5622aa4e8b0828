#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "eqr/plqr.hpp"
#include "test_util.hpp"

using namespace eqr;
using eqr::testing::Sampler;

TEST(Projector, Properties) {
  Sampler s(41);
  for (int k = 0; k < eqr::testing::kReps; ++k) {
    const Vec3 eta = s.unit();
    const Mat9 P = projector(eta);
    EXPECT_LT((P * P - P).norm(), 1e-14);
    EXPECT_EQ(P, P.transpose());
    EXPECT_LT((P.topLeftCorner<3, 3>() * eta).norm(), 1e-15);
    Eigen::SelfAdjointEigenSolver<Mat3> es(P.topLeftCorner<3, 3>());
    EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-14);
    EXPECT_NEAR(es.eigenvalues()(1), 1.0, 1e-14);
    EXPECT_NEAR(es.eigenvalues()(2), 1.0, 1e-14);
    EXPECT_TRUE((P.bottomRightCorner<6, 6>().isIdentity(0.0)));
  }
  EXPECT_EQ(Mat3(projector(Vec3::UnitZ()).topLeftCorner<3, 3>()),
            Mat3(Vec3(1, 1, 0).asDiagonal()));
}

TEST(LinearizePlqr, HoverBlocks) {
  const Params p;
  const Input hover{Vec3::Zero(), p.mass * p.gravity};
  const PlqrLinearization lin = linearize_plqr(origin(), hover, p);
  Mat9 A = Mat9::Zero();
  A.block<3, 3>(3, 0) = -p.gravity * Mat3(Vec3(1, 1, 0).asDiagonal());
  A.block<3, 3>(6, 3) = Mat3::Identity();
  EXPECT_LT((lin.A - A).norm(), 1e-14);
  Vec9 thrust_col = Vec9::Zero();
  thrust_col(5) = -1.0 / p.mass;
  EXPECT_EQ(lin.B.col(3), thrust_col);
  EXPECT_EQ(Mat3(lin.B.topLeftCorner<3, 3>()), hat(Vec3::UnitZ()));
}

TEST(LinearizePlqr, AnnihilatesBearingDirection) {
  Sampler s(42);
  const Params p;
  for (int k = 0; k < eqr::testing::kReps; ++k) {
    const State xi_d = s.state();
    const PlqrLinearization lin = linearize_plqr(xi_d, s.input(), p);
    Vec9 dir = Vec9::Zero();
    dir.head<3>() = xi_d.eta;
    EXPECT_LT((lin.A * dir).norm(), 1e-12);
    Vec9 thrust_col = Vec9::Zero();
    thrust_col.segment<3>(3) = -xi_d.eta / p.mass;
    EXPECT_LT((lin.B.col(3) - thrust_col).norm(), 1e-15);
  }
}

TEST(LinearizePlqr, MatchesProjectedDynamicsJacobian) {
  const Params p;
  const double h = 1e-6;
  for (int k = 0; k <= 20; ++k) {
    const DesiredPoint d = flat_to_state(HelixCurve{}, 0.5 * k, p);
    const PlqrLinearization lin = linearize_plqr(d.state, d.input, p);
    const Mat9 proj = projector(d.state.eta);
    Mat9 A_fd;
    for (int j = 0; j < 9; ++j) {
      const Vec9 dx = h * proj.col(j);
      A_fd.col(j) = (dynamics(State::from_vector(d.state.vector() + dx), d.input, p) -
                     dynamics(State::from_vector(d.state.vector() - dx), d.input, p)) /
                    (2 * h);
    }
    EXPECT_LT((lin.A - A_fd).norm(), 1e-6);
    Mat9x4 B_fd;
    for (int j = 0; j < 4; ++j) {
      Vec4 du = Vec4::Zero();
      du(j) = h;
      B_fd.col(j) = (dynamics(d.state, Input::from_vector(d.input.vector() + du), p) -
                     dynamics(d.state, Input::from_vector(d.input.vector() - du), p)) /
                    (2 * h);
    }
    EXPECT_LT((lin.B - B_fd).norm(), 1e-6);
  }
}

TEST(PlqrGains, TerminalAndStationary) {
  const Params p;
  const WeightSet w = WeightSet::paper_defaults();
  const DesiredSchedule hover = sample_trajectory(HoverCurve{}, 0.0, 30.0, 0.01, p);
  const GainSchedule g = plqr_gains(hover, w, p);
  const Mat9 proj = projector(Vec3::UnitZ());
  EXPECT_LT((g.P.back() - proj * w.F * proj).norm(), 1e-15);
  EXPECT_EQ(g.K.front().rows(), 4);
  EXPECT_EQ(g.K.front().cols(), 9);
  const PlqrLinearization lin = linearize_plqr(origin(), hover.points.front().input, p);
  const Eigen::MatrixXd& P = g.P.front();
  const Eigen::MatrixXd residual = lin.A.transpose() * P + P * lin.A -
                                   P * lin.B * w.S.inverse() * lin.B.transpose() * P +
                                   proj * w.Q * proj;
  EXPECT_LT(residual.norm(), 1e-6 * P.norm());
}

TEST(PlqrControl, Cases) {
  const Params p;
  const DesiredPoint d{0.0, origin(), Input{Vec3(0.1, 0.2, 0.3), p.mass * p.gravity}};
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(4, 9);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 9; ++j) K(i, j) = 0.1 * (i + 1) + 0.01 * j;
  }
  EXPECT_EQ(plqr_control(origin(), d, K).vector(), d.input.vector());

  State shifted = origin();
  shifted.pos = Vec3(0, 0, 0.7);
  Vec9 err = Vec9::Zero();
  err(8) = 0.7;
  const Vec4 expected = d.input.vector() - K * err;
  EXPECT_LT((plqr_control(shifted, d, K).vector() - expected).norm(), 1e-15);

  // Bearing error along eta_d is projected away.
  State stretched = origin();
  stretched.eta = 1.5 * Vec3::UnitZ();
  EXPECT_EQ(plqr_control(stretched, d, K).vector(), d.input.vector());

  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(4, 9);
  big(3, 8) = 1e3;
  EXPECT_EQ(plqr_control(shifted, d, big).thrust, 0.0);
}
