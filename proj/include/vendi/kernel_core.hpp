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

#ifndef VENDI_KERNEL_CORE_HPP
#define VENDI_KERNEL_CORE_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vendi/tolerances.hpp"

namespace vendi {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Validated n x n similarity matrix: finite, symmetric, unit diagonal.
///
/// Positive semidefiniteness is certified by the eigensolve in the spectrum
/// routines; construction only rejects entries with |K[i,j]| > 1, which no
/// PSD unit-diagonal matrix can contain.
class SimilarityMatrix {
 public:
  /// Validates `raw` and symmetrizes it as (K + K^T) / 2.
  static SimilarityMatrix validate(Eigen::MatrixXd raw,
                                   const Tolerances& tol = {});

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }

  /// Principal submatrix over `indices`, in the given order.
  SimilarityMatrix principal_submatrix(std::span<const std::size_t> indices) const;

 private:
  explicit SimilarityMatrix(Eigen::MatrixXd entries)
      : entries_(std::move(entries)) {}

  Eigen::MatrixXd entries_;
};

inline SimilarityMatrix validate_similarity_matrix(Eigen::MatrixXd raw,
                                                   const Tolerances& tol = {}) {
  return SimilarityMatrix::validate(std::move(raw), tol);
}

/// Explicit feature map, one unit-norm row per sample. Rows are normalized at
/// construction so the Gram path and the covariance path see identical data.
/// Storage is dense or compressed-sparse; both give the same inner products.
class FeatureMatrix {
 public:
  static FeatureMatrix from_dense(RowMatrix raw, const Tolerances& tol = {});
  static FeatureMatrix from_sparse(SparseRowMatrix raw,
                                   const Tolerances& tol = {});

  std::size_t size() const;       // n
  std::size_t dimension() const;  // d
  bool is_sparse() const { return std::holds_alternative<SparseRowMatrix>(rows_); }

  const RowMatrix& dense() const { return std::get<RowMatrix>(rows_); }
  const SparseRowMatrix& sparse() const { return std::get<SparseRowMatrix>(rows_); }
  RowMatrix to_dense() const;

  /// <phi(x_i), phi(x_j)> accumulated in increasing column order.
  double dot(Eigen::Index i, Eigen::Index j) const;

 private:
  explicit FeatureMatrix(std::variant<RowMatrix, SparseRowMatrix> rows)
      : rows_(std::move(rows)) {}

  std::variant<RowMatrix, SparseRowMatrix> rows_;
};

/// Probability distribution over the n samples.
class WeightVector {
 public:
  static WeightVector validate(std::vector<double> p, const Tolerances& tol = {});
  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return p_.size(); }
  std::span<const double> values() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

  /// Restriction to `indices`, rescaled to sum to one.
  WeightVector restrict_to(std::span<const std::size_t> indices) const;

 private:
  explicit WeightVector(std::vector<double> p) : p_(std::move(p)) {}

  std::vector<double> p_;
};

enum class KernelKind {
  kCosine,
  kRbf,
  kNgram,
  kTanimoto,
  kProbabilityProduct,
  kPrecomputed,
};

std::string_view kernel_kind_name(KernelKind kind);
KernelKind parse_kernel_kind(std::string_view name);

struct KernelSpec {
  KernelKind kind = KernelKind::kCosine;
  double rbf_sigma = 1.0;
  int ngram_max = 4;

  static constexpr int kMaxNgramOrder = 32;

  /// Throws kNonPositiveSigma / kInvalidArgument when parameters do not fit
  /// the kind.
  void validate() const;
  /// True for kinds whose batch builder returns a FeatureMatrix.
  bool has_explicit_features() const {
    return kind == KernelKind::kCosine || kind == KernelKind::kNgram;
  }
};

/// K[i,j] = <phi(x_i), phi(x_j)>, each entry reduced sequentially over the
/// feature index; row blocks may be computed on several threads.
SimilarityMatrix gram_from_features(const FeatureMatrix& features,
                                    const Tolerances& tol = {});

/// (1/n) * sum_i phi(x_i) phi(x_i)^T, the d x d matrix sharing the nonzero
/// eigenvalues of K/n.
Eigen::MatrixXd feature_covariance(const FeatureMatrix& features);

/// Columns `indices` of the Gram matrix, i.e. an n x m block of K.
Eigen::MatrixXd gram_columns(const FeatureMatrix& features,
                             std::span<const std::size_t> indices);

/// diag(sqrt(p)) * K * diag(sqrt(p)). Unit trace when K has unit diagonal.
Eigen::MatrixXd weighted_kernel(const SimilarityMatrix& kernel,
                                const WeightVector& weights);

}  // namespace vendi

#endif  // VENDI_KERNEL_CORE_HPP
