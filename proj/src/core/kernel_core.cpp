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

#include "vendi/kernel_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "parallel.hpp"
#include "vendi/error.hpp"

namespace vendi {

namespace {

std::string format_index(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "entry (" << i << ", " << j << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// SimilarityMatrix

SimilarityMatrix SimilarityMatrix::validate(Eigen::MatrixXd raw,
                                            const Tolerances& tol) {
  if (raw.rows() != raw.cols()) {
    std::ostringstream os;
    os << "similarity matrix is " << raw.rows() << "x" << raw.cols();
    fail(ErrorCode::kNonSquare, os.str());
  }
  const Eigen::Index n = raw.rows();
  if (n == 0) fail(ErrorCode::kInvalidArgument, "similarity matrix is empty");

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!std::isfinite(raw(i, j)))
        fail(ErrorCode::kNonFiniteEntry, format_index(i, j) + " is not finite",
             i, j);

  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(raw(i, i) - 1.0) > tol.diag_tol) {
      std::ostringstream os;
      os << "diagonal entry " << i << " is " << raw(i, i) << ", expected 1";
      fail(ErrorCode::kDiagonalNotUnit, os.str(), i, i);
    }
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = raw(i, j);
      const double b = raw(j, i);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      if (std::abs(a - b) > tol.sym_tol * scale) {
        std::ostringstream os;
        os << format_index(i, j) << " = " << a << " but " << format_index(j, i)
           << " = " << b;
        fail(ErrorCode::kAsymmetryExceedsTolerance, os.str(), i, j);
      }
      const double mean = 0.5 * (a + b);
      raw(i, j) = mean;
      raw(j, i) = mean;
    }
  }

  // Cauchy-Schwarz: a PSD matrix has |K[i,j]| <= sqrt(K[i,i] K[j,j]).
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double bound = std::sqrt(raw(i, i) * raw(j, j)) + tol.diag_tol;
      if (std::abs(raw(i, j)) > bound) {
        std::ostringstream os;
        os << format_index(i, j) << " = " << raw(i, j)
           << " exceeds the unit bound of a PSD unit-diagonal kernel";
        fail(ErrorCode::kNotPositiveSemidefinite, os.str(), i, j);
      }
    }
  }
  return SimilarityMatrix(std::move(raw));
}

SimilarityMatrix SimilarityMatrix::principal_submatrix(
    std::span<const std::size_t> indices) const {
  const auto m = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      sub(a, b) = entries_(static_cast<Eigen::Index>(indices[a]),
                           static_cast<Eigen::Index>(indices[b]));
  return SimilarityMatrix(std::move(sub));
}

// ---------------------------------------------------------------------------
// FeatureMatrix

FeatureMatrix FeatureMatrix::from_dense(RowMatrix raw, const Tolerances& tol) {
  if (raw.rows() == 0) fail(ErrorCode::kInvalidArgument, "feature matrix has no rows");
  if (raw.cols() == 0) fail(ErrorCode::kInvalidArgument, "feature matrix has no columns");
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    double sq = 0.0;
    for (Eigen::Index k = 0; k < raw.cols(); ++k) {
      const double v = raw(i, k);
      if (!std::isfinite(v))
        fail(ErrorCode::kNonFiniteEntry, format_index(i, k) + " is not finite",
             i, k);
      sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (norm < tol.norm_tol) {
      std::ostringstream os;
      os << "row " << i << " has norm " << norm << "; cosine similarity is undefined";
      fail(ErrorCode::kZeroNormRow, os.str(), i);
    }
    raw.row(i) /= norm;
  }
  return FeatureMatrix(std::move(raw));
}

FeatureMatrix FeatureMatrix::from_sparse(SparseRowMatrix raw,
                                         const Tolerances& tol) {
  if (raw.rows() == 0) fail(ErrorCode::kInvalidArgument, "feature matrix has no rows");
  raw.makeCompressed();
  for (Eigen::Index i = 0; i < raw.outerSize(); ++i) {
    double sq = 0.0;
    for (SparseRowMatrix::InnerIterator it(raw, i); it; ++it) {
      if (!std::isfinite(it.value()))
        fail(ErrorCode::kNonFiniteEntry,
             format_index(i, it.col()) + " is not finite", i, it.col());
      sq += it.value() * it.value();
    }
    const double norm = std::sqrt(sq);
    if (norm < tol.norm_tol) {
      std::ostringstream os;
      os << "row " << i << " has norm " << norm << "; cosine similarity is undefined";
      fail(ErrorCode::kZeroNormRow, os.str(), i);
    }
    for (SparseRowMatrix::InnerIterator it(raw, i); it; ++it) it.valueRef() /= norm;
  }
  return FeatureMatrix(std::move(raw));
}

std::size_t FeatureMatrix::size() const {
  return std::visit([](const auto& m) { return static_cast<std::size_t>(m.rows()); },
                    rows_);
}

std::size_t FeatureMatrix::dimension() const {
  return std::visit([](const auto& m) { return static_cast<std::size_t>(m.cols()); },
                    rows_);
}

RowMatrix FeatureMatrix::to_dense() const {
  if (is_sparse()) return RowMatrix(sparse());
  return dense();
}

double FeatureMatrix::dot(Eigen::Index i, Eigen::Index j) const {
  if (!is_sparse()) {
    const RowMatrix& m = dense();
    const double* a = m.row(i).data();
    const double* b = m.row(j).data();
    double s = 0.0;
    for (Eigen::Index k = 0; k < m.cols(); ++k) s += a[k] * b[k];
    return s;
  }
  // Merge two sorted index lists.
  const SparseRowMatrix& m = sparse();
  SparseRowMatrix::InnerIterator a(m, i);
  SparseRowMatrix::InnerIterator b(m, j);
  double s = 0.0;
  while (a && b) {
    if (a.col() == b.col()) {
      s += a.value() * b.value();
      ++a;
      ++b;
    } else if (a.col() < b.col()) {
      ++a;
    } else {
      ++b;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector WeightVector::validate(std::vector<double> p, const Tolerances& tol) {
  if (p.empty()) fail(ErrorCode::kInvalidWeights, "weight vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) {
      std::ostringstream os;
      os << "weight " << i << " is not finite";
      fail(ErrorCode::kInvalidWeights, os.str(), i);
    }
    if (p[i] < 0.0) {
      std::ostringstream os;
      os << "weight " << i << " is negative (" << p[i] << ")";
      fail(ErrorCode::kInvalidWeights, os.str(), i);
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > tol.weight_tol) {
    std::ostringstream os;
    os << "weights sum to " << sum << ", expected 1";
    fail(ErrorCode::kInvalidWeights, os.str());
  }
  return WeightVector(std::move(p));
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) fail(ErrorCode::kInvalidWeights, "weight vector is empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightVector WeightVector::restrict_to(std::span<const std::size_t> indices) const {
  std::vector<double> sub;
  sub.reserve(indices.size());
  double sum = 0.0;
  for (std::size_t i : indices) {
    sub.push_back(p_.at(i));
    sum += p_[i];
  }
  if (sub.empty() || !(sum > 0.0))
    fail(ErrorCode::kInvalidWeights, "selected items carry zero total weight");
  for (double& v : sub) v /= sum;
  return WeightVector(std::move(sub));
}

// ---------------------------------------------------------------------------
// KernelSpec

std::string_view kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kCosine: return "cosine";
    case KernelKind::kRbf: return "rbf";
    case KernelKind::kNgram: return "ngram";
    case KernelKind::kTanimoto: return "tanimoto";
    case KernelKind::kProbabilityProduct: return "prob-product";
    case KernelKind::kPrecomputed: return "precomputed";
  }
  return "unknown";
}

KernelKind parse_kernel_kind(std::string_view name) {
  for (KernelKind k : {KernelKind::kCosine, KernelKind::kRbf, KernelKind::kNgram,
                       KernelKind::kTanimoto, KernelKind::kProbabilityProduct,
                       KernelKind::kPrecomputed}) {
    if (kernel_kind_name(k) == name) return k;
  }
  fail(ErrorCode::kInvalidArgument, "unknown kernel kind '" + std::string(name) + "'");
}

void KernelSpec::validate() const {
  if (kind == KernelKind::kRbf && !(std::isfinite(rbf_sigma) && rbf_sigma > 0.0)) {
    std::ostringstream os;
    os << "rbf sigma must be finite and positive, got " << rbf_sigma;
    fail(ErrorCode::kNonPositiveSigma, os.str());
  }
  if (kind == KernelKind::kNgram && (ngram_max < 1 || ngram_max > kMaxNgramOrder)) {
    std::ostringstream os;
    os << "ngram max order must be in [1, " << kMaxNgramOrder << "], got " << ngram_max;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
}

// ---------------------------------------------------------------------------
// Constructions

SimilarityMatrix gram_from_features(const FeatureMatrix& features,
                                    const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(features.size());
  Eigen::MatrixXd k(n, n);
  detail::parallel_rows(static_cast<std::size_t>(n), 64, [&](std::size_t row) {
    const auto i = static_cast<Eigen::Index>(row);
    for (Eigen::Index j = i; j < n; ++j) k(i, j) = features.dot(i, j);
  });
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) k(i, j) = k(j, i);
  return SimilarityMatrix::validate(std::move(k), tol);
}

Eigen::MatrixXd feature_covariance(const FeatureMatrix& features) {
  const auto n = static_cast<Eigen::Index>(features.size());
  const auto d = static_cast<Eigen::Index>(features.dimension());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  if (!features.is_sparse()) {
    const RowMatrix& f = features.dense();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double* row = f.row(i).data();
      for (Eigen::Index a = 0; a < d; ++a) {
        const double ra = row[a];
        if (ra == 0.0) continue;
        for (Eigen::Index b = a; b < d; ++b) cov(a, b) += ra * row[b];
      }
    }
  } else {
    const SparseRowMatrix& f = features.sparse();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (SparseRowMatrix::InnerIterator a(f, i); a; ++a) {
        SparseRowMatrix::InnerIterator b = a;
        for (; b; ++b) cov(a.col(), b.col()) += a.value() * b.value();
      }
    }
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a; b < d; ++b) {
      cov(a, b) *= inv_n;
      cov(b, a) = cov(a, b);
    }
  }
  return cov;
}

Eigen::MatrixXd gram_columns(const FeatureMatrix& features,
                             std::span<const std::size_t> indices) {
  const auto n = static_cast<Eigen::Index>(features.size());
  const auto m = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd cols(n, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const auto j = static_cast<Eigen::Index>(indices[c]);
    if (j >= n) fail(ErrorCode::kInvalidArgument, "column index out of range");
    for (Eigen::Index i = 0; i < n; ++i) cols(i, c) = features.dot(i, j);
  }
  return cols;
}

Eigen::MatrixXd weighted_kernel(const SimilarityMatrix& kernel,
                                const WeightVector& weights) {
  const std::size_t n = kernel.size();
  if (weights.size() != n) {
    std::ostringstream os;
    os << "kernel has " << n << " rows but the weight vector has " << weights.size()
       << " entries";
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
  Eigen::VectorXd root(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) root(static_cast<Eigen::Index>(i)) = std::sqrt(weights[i]);
  return root.asDiagonal() * kernel.entries() * root.asDiagonal();
}

}  // namespace vendi
