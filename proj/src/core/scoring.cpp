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

#include "vendi/scoring.hpp"

#include <algorithm>
#include <sstream>

#include "vendi/error.hpp"

namespace vendi {

SpectrumResult score_dataset(const Dataset& dataset, const KernelSpec& spec,
                             const ScoreOptions& options, const Tolerances& tol) {
  const std::size_t n = dataset.size();
  if (options.nystrom_columns > 0) {
    if (dataset.weights)
      fail(ErrorCode::kInvalidArgument,
           "Nystrom approximation does not support sample weights");
    if (options.nystrom_columns > n) {
      std::ostringstream os;
      os << "cannot sample " << options.nystrom_columns << " columns from " << n
         << " items";
      fail(ErrorCode::kInvalidArgument, os.str());
    }
    const std::vector<std::size_t> indices =
        sample_columns(n, options.nystrom_columns, options.seed);
    return nystrom_vendi(build_kernel_columns(dataset.samples, spec, indices, tol),
                         indices, tol);
  }

  const KernelData kernel = build_kernel(dataset.samples, spec, tol);
  if (dataset.weights)
    return vendi_score_weighted(to_similarity_matrix(kernel, tol), *dataset.weights, tol);
  if (const auto* f = std::get_if<FeatureMatrix>(&kernel)) return vendi_score_auto(*f, tol);
  return vendi_score(std::get<SimilarityMatrix>(kernel), tol);
}

double intdiv_dataset(const Dataset& dataset, const KernelSpec& spec,
                      const Tolerances& tol) {
  const KernelData kernel = build_kernel(dataset.samples, spec, tol);
  if (const auto* f = std::get_if<FeatureMatrix>(&kernel)) return intdiv(*f);
  return intdiv(std::get<SimilarityMatrix>(kernel));
}

NgramDiversity ngram_diversity_dataset(const Dataset& dataset, int max_order) {
  const auto* texts = std::get_if<std::vector<TextSample>>(&dataset.samples);
  if (!texts) {
    std::ostringstream os;
    os << "n-gram diversity needs text samples, got " << sample_kind_name(dataset.samples);
    fail(ErrorCode::kKindMismatch, os.str());
  }
  return ngram_diversity_profile(*texts, max_order);
}

double mode_diversity_dataset(const Dataset& dataset, const Tolerances& tol) {
  const auto* dense = std::get_if<DenseSamples>(&dataset.samples);
  if (!dense) {
    std::ostringstream os;
    os << "mode diversity needs class-probability rows, got "
       << sample_kind_name(dataset.samples);
    fail(ErrorCode::kKindMismatch, os.str());
  }
  return mode_diversity(class_distributions(*dense, tol));
}

std::vector<double> top_eigenvalues(const SpectrumResult& result, std::size_t count) {
  const std::size_t k = std::min(count, result.n);
  std::vector<double> top(k, 0.0);
  for (std::size_t i = 0; i < k && i < static_cast<std::size_t>(result.eigenvalues.size()); ++i)
    top[i] = result.eigenvalues(static_cast<Eigen::Index>(i));
  return top;
}

}  // namespace vendi
