#include "eqr/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace eqr::io {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

namespace {

void put_row(std::ostream& os, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << format_number(row[i]);
  }
  os << '\n';
}

void put_matrix_header(std::ostream& os, const char* prefix, long rows, long cols) {
  for (long r = 1; r <= rows; ++r) {
    for (long c = 1; c <= cols; ++c) os << ',' << prefix << '_' << r << c;
  }
}

template <typename M>
void append_row_major(std::vector<double>& row, const M& m) {
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
  }
}

template <typename V>
void append(std::vector<double>& row, const V& v) {
  for (long i = 0; i < v.size(); ++i) row.push_back(v(i));
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const DesiredSchedule& schedule) {
  os << "t,eta_1,eta_2,eta_3,v_1,v_2,v_3,x_1,x_2,x_3,omega_1,omega_2,omega_3,thrust\n";
  std::vector<double> row;
  for (const DesiredPoint& d : schedule.points) {
    row.clear();
    row.push_back(d.time);
    append(row, d.state.vector());
    append(row, d.input.vector());
    put_row(os, row);
  }
}

void write_lifted_csv(std::ostream& os, const LiftedTrajectory& lifted) {
  os << 't';
  put_matrix_header(os, "r", 3, 3);
  os << ",vx_1,vx_2,vx_3,xx_1,xx_2,xx_3\n";
  std::vector<double> row;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const GroupElement& X = lifted.elements()[i];
    row.clear();
    row.push_back(lifted.time(i));
    append_row_major(row, X.rotation);
    append(row, X.v_slot);
    append(row, X.x_slot);
    put_row(os, row);
  }
}

void write_linearization_csv(std::ostream& os, const std::vector<LinearizationPair>& lin) {
  os << 't';
  put_matrix_header(os, "a", 8, 8);
  put_matrix_header(os, "b", 8, 4);
  os << '\n';
  std::vector<double> row;
  for (const LinearizationPair& l : lin) {
    row.clear();
    row.push_back(l.time);
    append_row_major(row, l.A);
    append_row_major(row, l.B);
    put_row(os, row);
  }
}

void write_gains_csv(std::ostream& os, const GainSchedule& gains) {
  if (gains.K.empty()) throw std::invalid_argument("write_gains_csv: empty schedule");
  os << 't';
  put_matrix_header(os, "k", gains.K.front().rows(), gains.K.front().cols());
  os << '\n';
  std::vector<double> row;
  for (std::size_t i = 0; i < gains.K.size(); ++i) {
    row.clear();
    row.push_back(gains.t0 + gains.dt * static_cast<double>(i));
    append_row_major(row, gains.K[i]);
    put_row(os, row);
  }
}

void write_run_csv(std::ostream& os, const SimResult& result) {
  os << "t,eta_1,eta_2,eta_3,v_1,v_2,v_3,x_1,x_2,x_3,omega_1,omega_2,omega_3,thrust,err_norm,"
        "eps_norm\n";
  std::vector<double> row;
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    row.clear();
    row.push_back(result.times[i]);
    append(row, result.states[i].vector());
    append(row, result.inputs[i].vector());
    row.push_back(result.error_norm[i]);
    row.push_back(result.eps_norm[i]);
    put_row(os, row);
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
  os << "theta,phi,rmse_eqr,converged_eqr,rmse_plqr,converged_plqr\n";
  for (const SweepCell& c : cells) {
    os << format_number(c.theta) << ',' << format_number(c.phi) << ','
       << format_number(c.rmse_eqr) << ',' << (c.converged_eqr ? 1 : 0) << ','
       << format_number(c.rmse_plqr) << ',' << (c.converged_plqr ? 1 : 0) << '\n';
  }
}

void write_pgm(std::ostream& os, const std::vector<SweepCell>& cells, int n_theta, int n_phi,
               Controller controller, double clip) {
  if (static_cast<int>(cells.size()) != n_theta * n_phi) {
    throw std::invalid_argument("write_pgm: cell count does not match grid");
  }
  if (!(clip > 0.0)) throw std::invalid_argument("write_pgm: clip must be positive");
  os << "P2\n" << n_phi << ' ' << n_theta << "\n255\n";
  for (int i = 0; i < n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const SweepCell& c = cells[static_cast<std::size_t>(i * n_phi + j)];
      const double r = controller == Controller::Eqr ? c.rmse_eqr : c.rmse_plqr;
      int px = 255;
      if (std::isfinite(r)) {
        px = static_cast<int>(std::lround(255.0 * std::min(std::max(r, 0.0), clip) / clip));
      }
      if (j) os << ' ';
      os << px;
    }
    os << '\n';
  }
}

}  // namespace eqr::io
