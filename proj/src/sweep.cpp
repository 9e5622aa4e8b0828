#include "eqr/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

namespace eqr {

double sweep_theta(int i, int n_theta) { return M_PI * i / (n_theta - 1); }

double sweep_phi(int j, int n_phi) { return 2.0 * M_PI * j / n_phi; }

namespace {

SweepCell run_cell(const Scenario& scenario, InitialCondition ic, int n_theta, int n_phi,
                   int index) {
  SweepCell cell;
  cell.theta = sweep_theta(index / n_phi, n_theta);
  cell.phi = sweep_phi(index % n_phi, n_phi);
  ic.bearing = InitialCondition::Bearing{cell.theta, cell.phi};
  const SimResult eqr = integrate_closed_loop(scenario, Controller::Eqr, ic, false);
  const SimResult plqr = integrate_closed_loop(scenario, Controller::Plqr, ic, false);
  cell.rmse_eqr = eqr.rmse;
  cell.converged_eqr = eqr.converged;
  cell.rmse_plqr = plqr.rmse;
  cell.converged_plqr = plqr.converged;
  return cell;
}

void check_grid(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw std::invalid_argument("sweep: grid must be at least 2x2");
  }
}

}  // namespace

std::vector<SweepCell> sweep(const Scenario& scenario, const InitialCondition& base, int n_theta,
                             int n_phi, int threads) {
  check_grid(n_theta, n_phi);
  const int cells = n_theta * n_phi;
  std::vector<SweepCell> out(static_cast<std::size_t>(cells));
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (int c = 0; c < cells; ++c) {
    out[static_cast<std::size_t>(c)] = run_cell(scenario, base, n_theta, n_phi, c);
  }
  return out;
}

std::vector<SweepCell> sweep_serial(const Scenario& scenario, const InitialCondition& base,
                                    int n_theta, int n_phi) {
  check_grid(n_theta, n_phi);
  const int cells = n_theta * n_phi;
  std::vector<SweepCell> out;
  out.reserve(static_cast<std::size_t>(cells));
  for (int c = 0; c < cells; ++c) {
    out.push_back(run_cell(scenario, base, n_theta, n_phi, c));
  }
  return out;
}

}  // namespace eqr
