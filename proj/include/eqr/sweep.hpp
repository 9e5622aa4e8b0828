#pragma once

#include <vector>

#include "eqr/simulator.hpp"

namespace eqr {

struct SweepCell {
  double theta = 0.0;
  double phi = 0.0;
  double rmse_eqr = 0.0;
  bool converged_eqr = false;
  double rmse_plqr = 0.0;
  bool converged_plqr = false;
};

/// theta_i = pi i / (n_theta - 1), phi_j = 2 pi j / n_phi.
double sweep_theta(int i, int n_theta);
double sweep_phi(int j, int n_phi);

/// Runs both controllers from every initial bearing of an n_theta x n_phi
/// grid. Cells are stored row-major in theta then phi; diverged runs carry
/// rmse = +inf. `threads` = 0 lets OpenMP choose.
std::vector<SweepCell> sweep(const Scenario& scenario, const InitialCondition& base, int n_theta,
                             int n_phi, int threads = 0);

/// Single-threaded reference for sweep().
std::vector<SweepCell> sweep_serial(const Scenario& scenario, const InitialCondition& base,
                                    int n_theta, int n_phi);

}  // namespace eqr
