#pragma once

#include <ostream>
#include <vector>

#include "eqr/error.hpp"
#include "eqr/flatness.hpp"
#include "eqr/lifting.hpp"
#include "eqr/lqr.hpp"
#include "eqr/simulator.hpp"
#include "eqr/sweep.hpp"

namespace eqr::io {

/// Every numeric CSV field is printed with "%.12e".
std::string format_number(double v);

/// t, eta_1..3, v_1..3, x_1..3, omega_1..3, thrust
void write_trajectory_csv(std::ostream& os, const DesiredSchedule& schedule);

/// t, r_11..r_33 (row-major), vx_1..3, xx_1..3
void write_lifted_csv(std::ostream& os, const LiftedTrajectory& lifted);

/// t, a_11..a_88 (row-major), b_11..b_84 (row-major)
void write_linearization_csv(std::ostream& os, const std::vector<LinearizationPair>& lin);

/// t, k_11..k_4n (row-major)
void write_gains_csv(std::ostream& os, const GainSchedule& gains);

/// t, state (9), input (4), err_norm, eps_norm
void write_run_csv(std::ostream& os, const SimResult& result);

/// theta, phi, rmse_eqr, converged_eqr, rmse_plqr, converged_plqr
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);

/// Plain (P2) grayscale image, one pixel per cell (rows theta, columns phi).
/// Pixel = round(255 * min(rmse, clip) / clip); non-finite rmse maps to 255.
void write_pgm(std::ostream& os, const std::vector<SweepCell>& cells, int n_theta, int n_phi,
               Controller controller, double clip);

}  // namespace eqr::io
