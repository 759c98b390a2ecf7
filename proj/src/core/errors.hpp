// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace gendock {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gendock
