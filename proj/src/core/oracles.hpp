// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace gendock {

struct UniformLineGrid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;  // >= 16 nodes
  double h = 0.0;
  std::vector<double> x;

  UniformLineGrid() = default;
  UniformLineGrid(double x_min, double x_max, int n);
};

// |xi| Fourier multiplier on periodic samples (period = n h): the
// Dirichlet-to-Neumann map of the periodic half-plane problem. Real cosine /
// sine sums, O(n^2) with a shared trig table, bitwise deterministic.
std::vector<double> periodic_abs_multiplier(std::span<const double> samples,
                                            double period);

/// Cross-check operator for the quarter plane: the Neumann condition on the
/// vertical ray is equivalent to even reflection across it, reducing the map
/// to the half-plane multiplier |xi| on the even extension of f. The data is
/// extended evenly about x = 0, padded to period 4 x_max, transformed, and
/// restricted back. Output uses the outward flux sign of the main solver
/// (positive operator).
///
/// Preconditions: |f| < 1e-12 max|f| on the outer 10% of nodes (keeps
/// wrap-around leakage below the comparison floor) and x_min on the grid
/// spacing lattice so the extension stays uniform.
std::vector<double> reflection_dtn_quarter_plane(const UniformLineGrid& grid,
                                                 std::span<const double> f);

std::vector<double> gaussian_bump(std::span<const double> nodes, double center,
                                  double width, double amplitude);

std::vector<double> gaussian_bump(const UniformLineGrid& grid, double center,
                                  double width, double amplitude);

}  // namespace gendock
