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

#ifndef VENDI_BASELINES_HPP
#define VENDI_BASELINES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vendi/kernel_core.hpp"
#include "vendi/similarity.hpp"

namespace vendi {

struct BaselineResult {
  std::string metric_name;
  double value = 0.0;
  std::size_t n = 0;
};

/// 1 - (1/n^2) sum_ij K[i,j].
double intdiv(const SimilarityMatrix& kernel);
/// Same quantity from explicit features: 1 - |sum_i phi(x_i)|^2 / n^2.
double intdiv(const FeatureMatrix& features);

/// Distinct n-grams over total n-grams, pooled across all texts.
/// Throws kNoNgramsAvailable when no text has `order` tokens.
double ngram_diversity(std::span<const TextSample> texts, int order);

struct NgramDiversity {
  std::vector<std::optional<double>> per_order;  // index k holds order k + 1
  double mean = 0.0;                             // over the available orders
};

/// ngram_diversity for orders 1..max_order. Orders with no n-gram are left
/// empty and excluded from the mean.
NgramDiversity ngram_diversity_profile(std::span<const TextSample> texts,
                                       int max_order = 4);

/// exp(H(p_hat)) with p_hat(y) = (1/n) sum_i p(y|x_i).
double mode_diversity(std::span<const ClassDistributionSample> samples);

}  // namespace vendi

#endif  // VENDI_BASELINES_HPP
