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

#include "vendi/baselines.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "vendi/error.hpp"
#include "vendi/spectrum.hpp"

namespace vendi {

double intdiv(const SimilarityMatrix& kernel) {
  const double n = static_cast<double>(kernel.size());
  double total = 0.0;
  const Eigen::MatrixXd& k = kernel.entries();
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < k.cols(); ++j) total += k(i, j);
  return 1.0 - total / (n * n);
}

double intdiv(const FeatureMatrix& features) {
  const auto n = static_cast<Eigen::Index>(features.size());
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(features.dimension()));
  if (features.is_sparse()) {
    const SparseRowMatrix& f = features.sparse();
    for (Eigen::Index i = 0; i < n; ++i)
      for (SparseRowMatrix::InnerIterator it(f, i); it; ++it) sum(it.col()) += it.value();
  } else {
    const RowMatrix& f = features.dense();
    for (Eigen::Index i = 0; i < n; ++i) sum += f.row(i).transpose();
  }
  const double nn = static_cast<double>(n);
  return 1.0 - sum.squaredNorm() / (nn * nn);
}

double ngram_diversity(std::span<const TextSample> texts, int order) {
  if (order < 1) fail(ErrorCode::kInvalidArgument, "n-gram order must be at least 1");
  const auto len = static_cast<std::size_t>(order);
  std::set<std::vector<std::string>> distinct;
  std::size_t total = 0;
  for (const TextSample& t : texts) {
    const auto& tok = t.tokens();
    if (tok.size() < len) continue;
    for (std::size_t s = 0; s + len <= tok.size(); ++s) {
      distinct.emplace(tok.begin() + static_cast<std::ptrdiff_t>(s),
                       tok.begin() + static_cast<std::ptrdiff_t>(s + len));
      ++total;
    }
  }
  if (total == 0) {
    std::ostringstream os;
    os << "no text has at least " << order << " tokens";
    fail(ErrorCode::kNoNgramsAvailable, os.str());
  }
  return static_cast<double>(distinct.size()) / static_cast<double>(total);
}

NgramDiversity ngram_diversity_profile(std::span<const TextSample> texts, int max_order) {
  if (max_order < 1) fail(ErrorCode::kInvalidArgument, "n-gram order must be at least 1");
  NgramDiversity out;
  double sum = 0.0;
  int available = 0;
  for (int order = 1; order <= max_order; ++order) {
    try {
      const double v = ngram_diversity(texts, order);
      out.per_order.emplace_back(v);
      sum += v;
      ++available;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoNgramsAvailable) throw;
      out.per_order.emplace_back(std::nullopt);
    }
  }
  if (available == 0) fail(ErrorCode::kNoNgramsAvailable, "no n-grams of any order");
  out.mean = sum / available;
  return out;
}

double mode_diversity(std::span<const ClassDistributionSample> samples) {
  if (samples.empty()) fail(ErrorCode::kInvalidArgument, "no class distributions");
  const std::size_t classes = samples.front().classes();
  std::vector<double> mean(classes, 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].classes() != classes) {
      std::ostringstream os;
      os << "sample " << i << " has " << samples[i].classes() << " classes, expected "
         << classes;
      fail(ErrorCode::kDimensionMismatch, os.str(), i);
    }
    for (std::size_t y = 0; y < classes; ++y) mean[y] += samples[i].probs()[y];
  }
  for (double& v : mean) v /= static_cast<double>(samples.size());
  return std::exp(shannon_entropy(mean));
}

}  // namespace vendi
