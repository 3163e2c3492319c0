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

#ifndef VENDI_SRC_CORE_TRIDIAGONAL_HPP
#define VENDI_SRC_CORE_TRIDIAGONAL_HPP

#include <Eigen/Dense>

namespace vendi::detail {

struct Tridiagonal {
  Eigen::VectorXd diagonal;     // n entries
  Eigen::VectorXd subdiagonal;  // n - 1 entries
};

// Orthogonal similarity reduction of a symmetric matrix to tridiagonal form
// by blocked Householder reflections. Only the lower triangle of `a` is read;
// `a` is overwritten. Panels of `block` columns are reduced with
// matrix-vector products and the trailing matrix is then updated with a
// single symmetric rank-2k product, which keeps most of the work in
// cache-friendly matrix-matrix kernels.
Tridiagonal tridiagonalize(Eigen::MatrixXd& a, Eigen::Index block = 32);

// Eigenvalues (ascending) of a symmetric matrix through `tridiagonalize`.
// Returns false when the tridiagonal QR iteration does not converge.
bool symmetric_eigenvalues(Eigen::MatrixXd a, Eigen::VectorXd& values);

}  // namespace vendi::detail

#endif  // VENDI_SRC_CORE_TRIDIAGONAL_HPP
