// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace gendock {

/// Band matrix in compact diagonal storage: entry (i, col) with
/// -kl <= col - i <= ku lives at a[i * (kl + ku + 1) + (col - i + kl)].
class BandMatrix {
 public:
  BandMatrix(int n, int kl, int ku);

  int n() const { return n_; }
  int kl() const { return kl_; }
  int ku() const { return ku_; }

  void add(int i, int col, double v);
  void set(int i, int col, double v);
  double get(int i, int col) const;

  // y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

  std::vector<double>& storage() { return a_; }
  const std::vector<double>& storage() const { return a_; }

 private:
  int n_, kl_, ku_, width_;
  std::vector<double> a_;
};

/// LU factorization of a band matrix with partial pivoting (row swaps stay
/// inside the band; the upper factor widens to kl + ku superdiagonals).
/// Deterministic: no data-dependent parallelism, fixed elimination order.
class BandLU {
 public:
  explicit BandLU(const BandMatrix& m);  // throws std::runtime_error if singular

  void solve(std::span<double> b) const;  // in place

 private:
  int n_, kl_, ku_, width_;
  std::vector<double> au_;    // upper factor rows, width kl + ku + 1
  std::vector<double> al_;    // multipliers, kl per row
  std::vector<int> pivot_;
};

}  // namespace gendock
