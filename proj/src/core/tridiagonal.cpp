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

#include "tridiagonal.hpp"

#include <algorithm>
#include <cmath>

namespace vendi::detail {

namespace {

// Householder reflector H = I - tau v v^T with v(0) = 1 such that
// H [alpha; x] = [beta; 0]. On return `x` holds v(1:) and `alpha` holds beta.
double make_reflector(double& alpha, Eigen::Ref<Eigen::VectorXd> x) {
  const double xnorm = x.norm();
  if (xnorm == 0.0) return 0.0;
  const double beta = -std::copysign(std::hypot(alpha, xnorm), alpha);
  const double tau = (beta - alpha) / beta;
  x /= (alpha - beta);
  alpha = beta;
  return tau;
}

}  // namespace

Tridiagonal tridiagonalize(Eigen::MatrixXd& a, Eigen::Index block) {
  const Eigen::Index n = a.rows();
  Tridiagonal t{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 1, 0))};
  Eigen::MatrixXd w(n, block);
  Eigen::VectorXd scratch(block);
  Eigen::MatrixXd left, right;

  for (Eigen::Index i = 0; i < n; i += block) {
    const Eigen::Index m = n - i;
    const Eigen::Index b = std::min(block, m);
    // Reduce columns i .. i+b-1. Column i+j of `a` below the subdiagonal
    // stores the reflector v_j; w(:, j), indexed from the panel origin,
    // accumulates the matching
    // update vector so the panel's reflectors act on the trailing matrix as
    // A - V W^T - W V^T.
    auto panel = a.block(i, i, m, m);
    for (Eigen::Index j = 0; j < b; ++j) {
      const Eigen::Index rows = m - j;
      if (j > 0) {
        panel.col(j).tail(rows).noalias() -=
            panel.block(j, 0, rows, j) * w.block(j, 0, 1, j).transpose();
        panel.col(j).tail(rows).noalias() -=
            w.block(j, 0, rows, j) * panel.block(j, 0, 1, j).transpose();
      }
      t.diagonal(i + j) = panel(j, j);
      if (rows == 1) break;

      double alpha = panel(j + 1, j);
      const double tau = make_reflector(alpha, panel.col(j).tail(rows - 2));
      t.subdiagonal(i + j) = alpha;
      panel(j + 1, j) = 1.0;
      const auto v = panel.col(j).tail(rows - 1);

      auto wj = w.col(j).segment(j + 1, rows - 1);
      wj.noalias() = panel.block(j + 1, j + 1, rows - 1, rows - 1)
                         .selfadjointView<Eigen::Lower>() * v;
      if (j > 0) {
        auto s = scratch.head(j);
        s.noalias() = w.block(j + 1, 0, rows - 1, j).transpose() * v;
        wj.noalias() -= panel.block(j + 1, 0, rows - 1, j) * s;
        s.noalias() = panel.block(j + 1, 0, rows - 1, j).transpose() * v;
        wj.noalias() -= w.block(j + 1, 0, rows - 1, j) * s;
      }
      wj *= tau;
      wj += (-0.5 * tau * wj.dot(v)) * v;
    }
    if (b < m) {
      // A22 -= V W^T + W V^T as one product [V W] [W V]^T on the lower triangle.
      const Eigen::Index rest = m - b;
      left.resize(rest, 2 * b);
      right.resize(rest, 2 * b);
      left << a.block(i + b, i, rest, b), w.block(b, 0, rest, b);
      right << w.block(b, 0, rest, b), a.block(i + b, i, rest, b);
      a.block(i + b, i + b, rest, rest).triangularView<Eigen::Lower>() -=
          left * right.transpose();
    }
  }
  return t;
}

bool symmetric_eigenvalues(Eigen::MatrixXd a, Eigen::VectorXd& values) {
  if (a.rows() == 0) {
    values.resize(0);
    return true;
  }
  const Tridiagonal t = tridiagonalize(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diagonal, t.subdiagonal, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return false;
  values = solver.eigenvalues();
  return true;
}

}  // namespace vendi::detail
