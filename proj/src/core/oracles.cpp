// SPDX-License-Identifier: Apache-2.0
#include "core/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace gendock {

UniformLineGrid::UniformLineGrid(double x_min_, double x_max_, int n_)
    : x_min(x_min_), x_max(x_max_), n(n_) {
  if (!(x_min >= 0.0) || !(x_max > x_min)) {
    throw std::invalid_argument("line grid requires 0 <= x_min < x_max");
  }
  if (n < 16) throw std::invalid_argument("line grid requires n >= 16");
  h = (x_max - x_min) / (n - 1);
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = x_min + i * h;
  x[n - 1] = x_max;
}

std::vector<double> periodic_abs_multiplier(std::span<const double> samples,
                                            double period) {
  const int N = static_cast<int>(samples.size());
  if (N < 2 || !(period > 0.0)) {
    throw std::invalid_argument("periodic multiplier: bad inputs");
  }
  std::vector<double> cos_tab(N), sin_tab(N);
  for (int m = 0; m < N; ++m) {
    cos_tab[m] = std::cos(2.0 * std::numbers::pi * m / N);
    sin_tab[m] = std::sin(2.0 * std::numbers::pi * m / N);
  }
  auto idx = [N](long q, long k) { return static_cast<int>((q * k) % N); };

  std::vector<double> re(N, 0.0), im(N, 0.0);
  for (int k = 0; k < N; ++k) {
    double cr = 0.0, ci = 0.0;
    for (int q = 0; q < N; ++q) {
      const int m = idx(q, k);
      cr += samples[q] * cos_tab[m];
      ci -= samples[q] * sin_tab[m];
    }
    const double xi = 2.0 * std::numbers::pi * std::min(k, N - k) / period;
    re[k] = xi * cr;
    im[k] = xi * ci;
  }
  std::vector<double> out(N, 0.0);
  for (int q = 0; q < N; ++q) {
    double acc = 0.0;
    for (int k = 0; k < N; ++k) {
      const int m = idx(q, k);
      acc += re[k] * cos_tab[m] - im[k] * sin_tab[m];
    }
    out[q] = acc / N;
  }
  return out;
}

std::vector<double> reflection_dtn_quarter_plane(const UniformLineGrid& grid,
                                                 std::span<const double> f) {
  if (static_cast<int>(f.size()) != grid.n) {
    throw std::invalid_argument("data length must equal grid size");
  }
  double peak = 0.0;
  for (double v : f) peak = std::max(peak, std::fabs(v));
  if (peak == 0.0) return std::vector<double>(grid.n, 0.0);

  const int margin = std::max(1, grid.n / 10);
  for (int i = 0; i < margin; ++i) {
    if (std::fabs(f[i]) >= 1e-12 * peak ||
        std::fabs(f[grid.n - 1 - i]) >= 1e-12 * peak) {
      throw PreconditionError(
          "data must vanish on the outer 10% of the oracle grid");
    }
  }

  const double h = grid.h;
  const double k_real = grid.x_max / h;
  const double q_min_real = grid.x_min / h;
  const long K = std::lround(k_real);
  const long q_min = std::lround(q_min_real);
  if (std::fabs(k_real - K) > 1e-9 || std::fabs(q_min_real - q_min) > 1e-9) {
    throw PreconditionError(
        "oracle grid endpoints must sit on the spacing lattice");
  }

  // Even extension about x = 0, zero-padded to period 4 x_max.
  const long N = 4 * K;
  std::vector<double> F(N, 0.0);
  auto f_at = [&](long q) -> double {
    const long i = q - q_min;
    return (i >= 0 && i < grid.n) ? f[i] : 0.0;
  };
  for (long q = 0; q <= K; ++q) F[q] = f_at(q);
  for (long q = 3 * K; q < N; ++q) F[q] = f_at(N - q);

  // Real-even data: cosine sums only, mod-N trig table for exact symmetry.
  std::vector<double> cos_tab(N);
  for (long m = 0; m < N; ++m) {
    cos_tab[m] = std::cos(2.0 * std::numbers::pi * m / static_cast<double>(N));
  }
  std::vector<double> coef(N, 0.0);
  const double period = 4.0 * grid.x_max;
  for (long k = 0; k < N; ++k) {
    double acc = 0.0;
    for (long q = 0; q < N; ++q) acc += F[q] * cos_tab[(q * k) % N];
    const double xi = 2.0 * std::numbers::pi * std::min(k, N - k) / period;
    coef[k] = xi * acc / N;
  }
  std::vector<double> out(grid.n, 0.0);
  for (int i = 0; i < grid.n; ++i) {
    const long q = q_min + i;
    double acc = 0.0;
    for (long k = 0; k < N; ++k) acc += coef[k] * cos_tab[(q * k) % N];
    out[i] = acc;
  }
  return out;
}

std::vector<double> gaussian_bump(std::span<const double> nodes, double center,
                                  double width, double amplitude) {
  if (!(width > 0.0)) throw std::invalid_argument("bump width must be positive");
  std::vector<double> out(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const double u = (nodes[i] - center) / width;
    out[i] = amplitude * std::exp(-u * u);
  }
  return out;
}

std::vector<double> gaussian_bump(const UniformLineGrid& grid, double center,
                                  double width, double amplitude) {
  return gaussian_bump(std::span<const double>(grid.x), center, width, amplitude);
}

}  // namespace gendock
