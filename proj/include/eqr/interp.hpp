#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace eqr {

/// Value halfway between nodes i and i+1 of a uniformly sampled sequence.
/// Uses the cubic through the four nearest nodes (one-sided at the ends),
/// falling back to the average when fewer than four nodes exist.
template <typename T>
T cubic_midpoint(const std::vector<T>& nodes, std::size_t i) {
  const std::size_t n = nodes.size();
  if (n < 4) {
    return 0.5 * (nodes[i] + nodes[i + 1]);
  }
  const std::size_t j = std::min<std::size_t>(i == 0 ? 0 : i - 1, n - 4);
  // Lagrange weights at x = i + 0.5 - j on stencil {0, 1, 2, 3}.
  static constexpr double kInterior[4] = {-1.0 / 16.0, 9.0 / 16.0, 9.0 / 16.0, -1.0 / 16.0};
  static constexpr double kLeft[4] = {5.0 / 16.0, 15.0 / 16.0, -5.0 / 16.0, 1.0 / 16.0};
  static constexpr double kRight[4] = {1.0 / 16.0, -5.0 / 16.0, 15.0 / 16.0, 5.0 / 16.0};
  const double* w = kInterior;
  if (i - j == 0) {
    w = kLeft;
  } else if (i - j == 2) {
    w = kRight;
  }
  return w[0] * nodes[j] + w[1] * nodes[j + 1] + w[2] * nodes[j + 2] + w[3] * nodes[j + 3];
}

}  // namespace eqr
