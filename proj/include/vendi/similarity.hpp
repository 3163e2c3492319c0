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

#ifndef VENDI_SIMILARITY_HPP
#define VENDI_SIMILARITY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vendi/kernel_core.hpp"

namespace vendi {

/// Tokenized text. Tokens are compared by value; tokenization is the
/// caller's job.
class TextSample {
 public:
  explicit TextSample(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }

 private:
  std::vector<std::string> tokens_;
};

/// Fixed-length fingerprint bitset. Bit 0 is the least significant bit.
class FingerprintSample {
 public:
  /// Throws kEmptyFingerprint when no bit is set.
  FingerprintSample(std::size_t bit_length, std::vector<std::uint64_t> words);
  static FingerprintSample from_bits(std::size_t bit_length,
                                     std::span<const std::size_t> set_bits);

  std::size_t bit_length() const { return bits_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t popcount() const;
  bool test(std::size_t bit) const;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

/// Predicted class distribution p(y|x).
class ClassDistributionSample {
 public:
  explicit ClassDistributionSample(std::vector<double> probs,
                                   const Tolerances& tol = {});

  std::span<const double> probs() const { return probs_; }
  std::size_t classes() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// -- pairwise kernels ---------------------------------------------------------

double cosine_similarity(std::span<const double> u, std::span<const double> v,
                         const Tolerances& tol = {});

/// exp(-|u - v|^2 / (2 sigma^2)).
double rbf_similarity(std::span<const double> u, std::span<const double> v,
                      double sigma);

/// Mean over orders 1..max_n of the cosine similarity between n-gram count
/// vectors. An order for which neither text has an n-gram contributes 1 when
/// the texts are identical and 0 otherwise; an order where only one side is
/// too short contributes 0.
double ngram_similarity(const TextSample& a, const TextSample& b, int max_n);

/// |a and b| / |a or b|.
double tanimoto_similarity(const FingerprintSample& a, const FingerprintSample& b);

/// sum_y sqrt(p(y|a) p(y|b)).
double probability_product_similarity(const ClassDistributionSample& a,
                                      const ClassDistributionSample& b);

// -- batch construction -------------------------------------------------------

/// n x d dense samples, one per row (embeddings, pixels, class probabilities).
struct DenseSamples {
  RowMatrix rows;
};

using SampleSet = std::variant<DenseSamples, std::vector<TextSample>,
                               std::vector<FingerprintSample>, SimilarityMatrix>;

std::size_t sample_count(const SampleSet& samples);
std::string_view sample_kind_name(const SampleSet& samples);

/// Restriction of a sample set to `indices`, in order.
SampleSet subset_samples(const SampleSet& samples,
                         std::span<const std::size_t> indices);

/// Converts dense rows to validated class distributions; row errors carry the
/// row index.
std::vector<ClassDistributionSample> class_distributions(const DenseSamples& samples,
                                                         const Tolerances& tol = {});

/// Unit-norm n-gram features whose Gram matrix equals ngram_similarity.
///
/// Columns are the distinct (order, n-gram) keys of the batch, sorted by key,
/// so a subset of a corpus and the same texts loaded alone produce identical
/// nonzero structure. A text with no n-gram at some order gets a single
/// indicator column keyed by its full token sequence at that order.
FeatureMatrix ngram_features(std::span<const TextSample> texts, int max_n,
                             const Tolerances& tol = {});

using KernelData = std::variant<FeatureMatrix, SimilarityMatrix>;

/// Builds the kernel for a homogeneous sample set. Cosine and ngram kinds
/// return a FeatureMatrix; the others return a SimilarityMatrix.
/// Throws kKindMismatch when the sample set does not fit the kernel kind.
KernelData build_kernel(const SampleSet& samples, const KernelSpec& spec,
                        const Tolerances& tol = {});

/// Columns `indices` of the kernel matrix without forming the full matrix.
Eigen::MatrixXd build_kernel_columns(const SampleSet& samples,
                                     const KernelSpec& spec,
                                     std::span<const std::size_t> indices,
                                     const Tolerances& tol = {});

/// Materializes a SimilarityMatrix from either kernel representation.
SimilarityMatrix to_similarity_matrix(const KernelData& kernel,
                                      const Tolerances& tol = {});

}  // namespace vendi

#endif  // VENDI_SIMILARITY_HPP
