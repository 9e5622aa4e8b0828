#include "eqr/lqr.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eqr/errors.hpp"
#include "eqr/interp.hpp"

namespace eqr {

WeightSet WeightSet::paper_defaults() {
  WeightSet w;
  Vec9 d;
  d << 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 0.1, 0.1, 0.1;
  w.F = d.asDiagonal();
  w.Q = d.asDiagonal();
  w.S = 0.5 * Mat4::Identity();
  return w;
}

namespace {

void check_weight(const Eigen::MatrixXd& M, double min_eig, const char* name) {
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(std::string("weight ") + name + " is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.eigenvalues().minCoeff() < min_eig) {
    throw std::invalid_argument(std::string("weight ") + name + " violates its eigenvalue bound");
  }
}

}  // namespace

void WeightSet::validate() const {
  check_weight(F, -1e-12, "F");
  check_weight(Q, -1e-12, "Q");
  check_weight(S, 1e-9, "S");
}

Mat8 transform_weights(const Mat9& W, const GroupElement& X_d) {
  const Eigen::Matrix<double, 9, 8> M = act_state_jacobian(X_d) * chart_inv_jacobian(LocalCoords::Zero());
  const Mat8 out = M.transpose() * W * M;
  return 0.5 * (out + out.transpose());
}

GainSchedule solve_riccati(const std::vector<Eigen::MatrixXd>& A,
                           const std::vector<Eigen::MatrixXd>& B,
                           const std::vector<Eigen::MatrixXd>& Q, const Eigen::MatrixXd& F,
                           const Mat4& S, double t0, double dt) {
  const std::size_t n = A.size();
  if (n == 0 || B.size() != n || Q.size() != n) {
    throw std::invalid_argument("solve_riccati: schedule sizes differ or are empty");
  }
  const Mat4 S_inv = S.llt().solve(Mat4::Identity());

  auto rhs = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& q,
                 const Eigen::MatrixXd& P) -> Eigen::MatrixXd {
    const Eigen::MatrixXd PB = P * b;
    return -a.transpose() * P - P * a + PB * S_inv * PB.transpose() - q;
  };

  GainSchedule out;
  out.t0 = t0;
  out.dt = dt;
  out.P.resize(n);
  out.K.resize(n);
  out.P[n - 1] = F;
  for (std::size_t i = n - 1; i-- > 0;) {
    const Eigen::MatrixXd& P = out.P[i + 1];
    const Eigen::MatrixXd a_mid = cubic_midpoint(A, i);
    const Eigen::MatrixXd b_mid = cubic_midpoint(B, i);
    const Eigen::MatrixXd q_mid = cubic_midpoint(Q, i);
    // Step backwards in time: h = -dt.
    const Eigen::MatrixXd k1 = rhs(A[i + 1], B[i + 1], Q[i + 1], P);
    const Eigen::MatrixXd k2 = rhs(a_mid, b_mid, q_mid, P - 0.5 * dt * k1);
    const Eigen::MatrixXd k3 = rhs(a_mid, b_mid, q_mid, P - 0.5 * dt * k2);
    const Eigen::MatrixXd k4 = rhs(A[i], B[i], Q[i], P - dt * k3);
    Eigen::MatrixXd next = P - (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    next = 0.5 * (next + next.transpose()).eval();
    if (!next.allFinite() || next.cwiseAbs().rowwise().sum().maxCoeff() > kRiccatiBlowup) {
      throw RiccatiBlowup("solve_riccati: |P| exceeded bound at t = " +
                          std::to_string(t0 + dt * static_cast<double>(i)));
    }
    out.P[i] = std::move(next);
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.K[i] = S_inv * B[i].transpose() * out.P[i];
  }
  return out;
}

namespace {

struct Bracket {
  std::size_t i;
  double s;
};

Bracket locate(const GainSchedule& schedule, double t) {
  const double tol = 1e-9 * schedule.dt;
  if (schedule.K.empty() || t < schedule.t0 - tol || t > schedule.tf() + tol) {
    throw OutOfRange("gain_at: t outside schedule");
  }
  if (schedule.K.size() == 1) return {0, 0.0};
  const double u = (t - schedule.t0) / schedule.dt;
  const double nearest = std::round(u);
  if (std::abs(u - nearest) < 1e-9) {
    const auto k = std::min(static_cast<std::size_t>(std::max(0.0, nearest)), schedule.K.size() - 1);
    return k + 1 < schedule.K.size() ? Bracket{k, 0.0} : Bracket{k - 1, 1.0};
  }
  std::size_t i = static_cast<std::size_t>(std::max(0.0, std::floor(u)));
  i = std::min(i, schedule.K.size() - 2);
  return {i, std::clamp(u - static_cast<double>(i), 0.0, 1.0)};
}

}  // namespace

Eigen::MatrixXd gain_at(const GainSchedule& schedule, double t) {
  const Bracket b = locate(schedule, t);
  if (b.s == 0.0) return schedule.K[b.i];
  if (b.s == 1.0) return schedule.K[b.i + 1];
  return (1.0 - b.s) * schedule.K[b.i] + b.s * schedule.K[b.i + 1];
}

Eigen::Matrix<double, 4, 8> eqr_gain_at(const GainSchedule& schedule, double t) {
  const Bracket b = locate(schedule, t);
  using K8 = Eigen::Matrix<double, 4, 8>;
  if (schedule.K.size() == 1 || b.s == 0.0) return K8(schedule.K[b.i]);
  if (b.s == 1.0) return K8(schedule.K[b.i + 1]);
  return (1.0 - b.s) * K8(schedule.K[b.i]) + b.s * K8(schedule.K[b.i + 1]);
}

GainSchedule eqr_gains(const LiftedTrajectory& lifted, const WeightSet& weights,
                       const Params& p) {
  weights.validate();
  const std::vector<LinearizationPair> lin = linearize_schedule(lifted, p);
  std::vector<Eigen::MatrixXd> A;
  std::vector<Eigen::MatrixXd> B;
  std::vector<Eigen::MatrixXd> Q;
  A.reserve(lin.size());
  B.reserve(lin.size());
  Q.reserve(lin.size());
  for (std::size_t i = 0; i < lin.size(); ++i) {
    A.emplace_back(lin[i].A);
    B.emplace_back(lin[i].B);
    Q.emplace_back(transform_weights(weights.Q, lifted.elements()[i]));
  }
  const Eigen::MatrixXd F = transform_weights(weights.F, lifted.elements().back());
  return solve_riccati(A, B, Q, F, weights.S, lifted.t0(), lifted.dt());
}

}  // namespace eqr
