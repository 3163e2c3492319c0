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

#ifndef VENDI_SCORING_HPP
#define VENDI_SCORING_HPP

#include <cstddef>
#include <cstdint>

#include "vendi/baselines.hpp"
#include "vendi/dataset.hpp"
#include "vendi/spectrum.hpp"

namespace vendi {

struct ScoreOptions {
  std::size_t nystrom_columns = 0;  // 0 = exact
  std::uint64_t seed = 0;           // column sampling seed
};

/// Vendi Score of a dataset under `spec`.
///
/// Weighted datasets go through the probability-weighted kernel. Otherwise
/// explicit-feature kernels use the d x d route when d < n and the n x n
/// route when not. With `nystrom_columns > 0` only the sampled kernel columns
/// are formed; this cannot be combined with weights.
SpectrumResult score_dataset(const Dataset& dataset, const KernelSpec& spec,
                             const ScoreOptions& options = {},
                             const Tolerances& tol = {});

double intdiv_dataset(const Dataset& dataset, const KernelSpec& spec,
                      const Tolerances& tol = {});

/// Requires text samples.
NgramDiversity ngram_diversity_dataset(const Dataset& dataset, int max_order = 4);

/// Requires dense samples whose rows are class distributions.
double mode_diversity_dataset(const Dataset& dataset, const Tolerances& tol = {});

/// The first `count` eigenvalues, zero-padded to min(count, n).
std::vector<double> top_eigenvalues(const SpectrumResult& result, std::size_t count = 10);

}  // namespace vendi

#endif  // VENDI_SCORING_HPP
