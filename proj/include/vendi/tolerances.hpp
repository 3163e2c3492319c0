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

#ifndef VENDI_TOLERANCES_HPP
#define VENDI_TOLERANCES_HPP

#include <cstddef>

namespace vendi {

/// Numerical tolerances shared by validation and the spectrum routines.
///
/// `psd_tol_per_sample` scales with the sample count: a kernel K of size n is
/// accepted when its smallest eigenvalue is at least `-psd_tol_per_sample * n`,
/// which is the same as requiring the eigenvalues of K/n to be at least
/// `-psd_tol_per_sample`.
struct Tolerances {
  double sym_tol = 1e-8;             // relative, per entry pair
  double diag_tol = 1e-6;            // |K[i,i] - 1|
  double psd_tol_per_sample = 1e-8;
  double weight_tol = 1e-6;          // |sum(p) - 1|
  double norm_tol = 1e-12;           // smallest admissible feature norm
  double spectrum_tol = 1e-6;        // |sum(lambda) - 1| before renormalizing
  double entropy_floor = 1e-300;     // lambda below this contributes 0 log 0
  double pinv_tol = 1e-10;           // Nystrom cutoff, relative to max eig(W)

  double psd_tol(std::size_t n) const {
    return psd_tol_per_sample * static_cast<double>(n);
  }
};

}  // namespace vendi

#endif  // VENDI_TOLERANCES_HPP
