// SPDX-License-Identifier: Apache-2.0
#include "core/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace gendock {

BandMatrix::BandMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), width_(kl + ku + 1) {
  if (n <= 0 || kl < 0 || ku < 0) throw std::invalid_argument("bad band sizes");
  a_.assign(static_cast<size_t>(n_) * width_, 0.0);
}

void BandMatrix::add(int i, int col, double v) {
  const int j = col - i + kl_;
  if (i < 0 || i >= n_ || j < 0 || j >= width_ || col < 0 || col >= n_) {
    throw std::out_of_range("band entry outside bandwidth");
  }
  a_[static_cast<size_t>(i) * width_ + j] += v;
}

void BandMatrix::set(int i, int col, double v) {
  const int j = col - i + kl_;
  if (i < 0 || i >= n_ || j < 0 || j >= width_ || col < 0 || col >= n_) {
    throw std::out_of_range("band entry outside bandwidth");
  }
  a_[static_cast<size_t>(i) * width_ + j] = v;
}

double BandMatrix::get(int i, int col) const {
  const int j = col - i + kl_;
  if (i < 0 || i >= n_ || j < 0 || j >= width_ || col < 0 || col >= n_) return 0.0;
  return a_[static_cast<size_t>(i) * width_ + j];
}

void BandMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    const int lo = std::max(0, i - kl_);
    const int hi = std::min(n_ - 1, i + ku_);
    double acc = 0.0;
    const double* row = a_.data() + static_cast<size_t>(i) * width_;
    for (int col = lo; col <= hi; ++col) acc += row[col - i + kl_] * x[col];
    y[i] = acc;
  }
}

BandLU::BandLU(const BandMatrix& m)
    : n_(m.n()), kl_(m.kl()), ku_(m.ku()), width_(m.kl() + m.ku() + 1),
      au_(m.storage()), al_(static_cast<size_t>(m.n()) * m.kl(), 0.0),
      pivot_(m.n()) {
  const int mm = width_;
  auto au = [this](int i, int j) -> double& {
    return au_[static_cast<size_t>(i) * width_ + j];
  };

  // Shift the top kl rows left so every stored row begins at its first
  // in-range column.
  int l = kl_;
  for (int i = 0; i < kl_ && i < n_; ++i) {
    for (int j = kl_ - i; j < mm; ++j) au(i, j - l) = au(i, j);
    --l;
    for (int j = mm - l - 1; j < mm; ++j) au(i, j) = 0.0;
  }

  l = kl_;
  for (int k = 0; k < n_; ++k) {
    if (l < n_) ++l;
    double piv = au(k, 0);
    int ip = k;
    for (int j = k + 1; j < l; ++j) {
      if (std::fabs(au(j, 0)) > std::fabs(piv)) {
        piv = au(j, 0);
        ip = j;
      }
    }
    pivot_[k] = ip;
    if (piv == 0.0) throw SingularMatrixError("band LU: singular matrix");
    if (ip != k) {
      for (int j = 0; j < mm; ++j) std::swap(au(k, j), au(ip, j));
    }
    for (int i = k + 1; i < l; ++i) {
      const double mult = au(i, 0) / au(k, 0);
      al_[static_cast<size_t>(k) * kl_ + (i - k - 1)] = mult;
      for (int j = 1; j < mm; ++j) au(i, j - 1) = au(i, j) - mult * au(k, j);
      au(i, mm - 1) = 0.0;
    }
  }
}

void BandLU::solve(std::span<double> b) const {
  const int mm = width_;
  auto au = [this](int i, int j) -> double {
    return au_[static_cast<size_t>(i) * width_ + j];
  };

  int l = kl_;
  for (int k = 0; k < n_; ++k) {
    const int ip = pivot_[k];
    if (ip != k) std::swap(b[k], b[ip]);
    if (l < n_) ++l;
    for (int i = k + 1; i < l; ++i) {
      b[i] -= al_[static_cast<size_t>(k) * kl_ + (i - k - 1)] * b[k];
    }
  }
  l = 1;
  for (int i = n_ - 1; i >= 0; --i) {
    double acc = b[i];
    for (int k = 1; k < l; ++k) acc -= au(i, k) * b[i + k];
    b[i] = acc / au(i, 0);
    if (l < mm) ++l;
  }
}

}  // namespace gendock
