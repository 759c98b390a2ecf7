// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace gendock {

/// Full eigendecomposition of a real symmetric matrix (row-major n x n):
/// Householder reduction to tridiagonal form followed by QL iteration with
/// implicit shifts. Eigenvalues return ascending; eigenvectors are the
/// matching columns of the returned orthogonal matrix. Sequential and
/// bitwise deterministic. Throws std::runtime_error if an eigenvalue fails
/// to converge within the iteration cap.
struct SymEig {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major, column k pairs with values[k]
};

SymEig symmetric_eigendecompose(int n, const std::vector<double>& a);

}  // namespace gendock
