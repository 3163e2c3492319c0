// Copyright 2026 The Vendi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VENDI_SRC_CORE_JACOBI_HPP
#define VENDI_SRC_CORE_JACOBI_HPP

#include <Eigen/Dense>

namespace vendi::detail {

struct JacobiEigen {
  Eigen::VectorXd values;   // unsorted
  Eigen::MatrixXd vectors;  // column k pairs with values(k)
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi rotations on a symmetric matrix. Only the upper triangle of
// `a` is read.
JacobiEigen jacobi_eigen(const Eigen::MatrixXd& a, int max_sweeps = 100);

}  // namespace vendi::detail

#endif  // VENDI_SRC_CORE_JACOBI_HPP
