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

#include "vendi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "jacobi.hpp"
#include "tridiagonal.hpp"
#include "vendi/error.hpp"

namespace vendi {

namespace {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::VectorXd values;
  if (!detail::symmetric_eigenvalues(m, values))
    fail(ErrorCode::kEigensolverFailure, "symmetric eigensolver did not converge");
  return values;
}

[[noreturn]] void not_psd(double min_eig, std::size_t n, const Tolerances& tol) {
  std::ostringstream os;
  os << "smallest eigenvalue of K is " << min_eig * static_cast<double>(n)
     << ", below -psd_tol = " << -tol.psd_tol(n);
  fail(ErrorCode::kNotPositiveSemidefinite, os.str());
}

// Unbiased draw from [0, range) on a 64-bit engine; independent of the
// standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % range;
  }
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities, double floor) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < floor) continue;  // 0 log 0 = 0
    h -= p * std::log(p);
  }
  return h;
}

SpectrumResult summarize_spectrum(Eigen::VectorXd raw, std::size_t n,
                                  const Tolerances& tol) {
  if (raw.size() > 0) {
    const double min_eig = raw.minCoeff();
    if (min_eig < -tol.psd_tol_per_sample) not_psd(min_eig, n, tol);
  }
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw(i) = std::clamp(raw(i), 0.0, 1.0);

  const double sum = raw.sum();
  if (!(std::abs(sum - 1.0) <= tol.spectrum_tol)) {
    std::ostringstream os;
    os << "normalized eigenvalues sum to " << sum << ", expected 1";
    fail(ErrorCode::kSpectrumNotNormalized, os.str());
  }
  raw /= sum;
  std::sort(raw.data(), raw.data() + raw.size(), std::greater<>());

  SpectrumResult result;
  result.entropy = shannon_entropy({raw.data(), static_cast<std::size_t>(raw.size())},
                                   tol.entropy_floor);
  result.score = std::exp(result.entropy);
  result.eigenvalues = std::move(raw);
  result.n = n;
  return result;
}

Eigen::VectorXd normalized_spectrum(const SimilarityMatrix& kernel,
                                    const Tolerances& tol) {
  return vendi_score(kernel, tol).eigenvalues;
}

SpectrumResult vendi_score(const SimilarityMatrix& kernel, const Tolerances& tol) {
  const std::size_t n = kernel.size();
  const Eigen::MatrixXd rho = kernel.entries() / static_cast<double>(n);
  return summarize_spectrum(symmetric_eigenvalues(rho), n, tol);
}

SpectrumResult vendi_score_weighted(const SimilarityMatrix& kernel,
                                    const WeightVector& weights,
                                    const Tolerances& tol) {
  const Eigen::MatrixXd weighted = weighted_kernel(kernel, weights);
  return summarize_spectrum(symmetric_eigenvalues(weighted), kernel.size(), tol);
}

SpectrumResult vendi_score_from_features(const FeatureMatrix& features,
                                         const Tolerances& tol) {
  const Eigen::MatrixXd cov = feature_covariance(features);
  return summarize_spectrum(symmetric_eigenvalues(cov), features.size(), tol);
}

SpectrumResult vendi_score_auto(const FeatureMatrix& features, const Tolerances& tol) {
  if (features.dimension() < features.size())
    return vendi_score_from_features(features, tol);
  return vendi_score(gram_from_features(features, tol), tol);
}

SpectrumResult vendi_score_trace(const SimilarityMatrix& kernel, const Tolerances& tol) {
  const std::size_t n = kernel.size();
  const double trace = kernel.entries().trace();
  if (!(std::abs(trace / static_cast<double>(n) - 1.0) <= tol.spectrum_tol)) {
    std::ostringstream os;
    os << "trace of K/n is " << trace / static_cast<double>(n) << ", expected 1";
    fail(ErrorCode::kSpectrumNotNormalized, os.str());
  }
  // Unit-trace density matrix; equals K/n when the diagonal is exactly one.
  const Eigen::MatrixXd rho = kernel.entries() / trace;

  const detail::JacobiEigen eig = detail::jacobi_eigen(rho);
  if (!eig.converged)
    fail(ErrorCode::kEigensolverFailure, "Jacobi eigensolver did not converge");
  const double min_eig = eig.values.minCoeff();
  if (min_eig < -tol.psd_tol_per_sample) not_psd(min_eig, n, tol);

  // log(rho) on the support of rho; the null space carries 0 log 0 = 0.
  Eigen::VectorXd log_values(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double v = eig.values(k);
    log_values(k) = v < tol.entropy_floor ? 0.0 : std::log(v);
  }
  const Eigen::MatrixXd log_rho =
      eig.vectors * log_values.asDiagonal() * eig.vectors.transpose();

  // tr(rho log rho) = sum_ij rho_ij (log rho)_ji
  double tr = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) tr += rho(i, j) * log_rho(j, i);

  Eigen::VectorXd values = eig.values.cwiseMax(0.0);
  values /= values.sum();
  std::sort(values.data(), values.data() + values.size(), std::greater<>());

  SpectrumResult result;
  result.entropy = -tr;
  result.score = std::exp(result.entropy);
  result.eigenvalues = std::move(values);
  result.n = n;
  return result;
}

std::vector<std::size_t> sample_columns(std::size_t n, std::size_t count,
                                        std::uint64_t seed) {
  if (count < 1 || count > n) {
    std::ostringstream os;
    os << "cannot sample " << count << " columns from " << n;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

SpectrumResult nystrom_vendi(const Eigen::MatrixXd& columns,
                             std::span<const std::size_t> indices,
                             const Tolerances& tol) {
  const Eigen::Index n = columns.rows();
  const auto m = static_cast<Eigen::Index>(indices.size());
  if (m < 1 || m > n || columns.cols() != m) {
    std::ostringstream os;
    os << "column block is " << n << "x" << columns.cols() << " for " << m
       << " sampled indices";
    fail(ErrorCode::kDimensionMismatch, os.str());
  }

  Eigen::MatrixXd w(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const auto row = static_cast<Eigen::Index>(indices[static_cast<std::size_t>(a)]);
    if (row >= n) fail(ErrorCode::kInvalidArgument, "sampled index out of range");
    w.row(a) = columns.row(row);
  }
  w = 0.5 * (w + w.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> w_eig(w);
  if (w_eig.info() != Eigen::Success)
    fail(ErrorCode::kEigensolverFailure, "eigensolver failed on the intersection block");
  const Eigen::VectorXd& w_values = w_eig.eigenvalues();  // ascending
  const double w_max = w_values(m - 1);
  if (w_values(0) < -tol.psd_tol(static_cast<std::size_t>(m))) {
    std::ostringstream os;
    os << "intersection block has eigenvalue " << w_values(0);
    fail(ErrorCode::kNotPositiveSemidefinite, os.str());
  }
  if (!(w_max > 0.0))
    fail(ErrorCode::kRankDeficientBlock, "intersection block has no positive eigenvalue");

  const double cutoff = tol.pinv_tol * w_max;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < m; ++k)
    if (w_values(k) > cutoff) kept.push_back(k);
  if (kept.empty())
    fail(ErrorCode::kRankDeficientBlock, "intersection block has no eigenvalue above the cutoff");

  const auto r = static_cast<Eigen::Index>(kept.size());
  Eigen::MatrixXd scaled_basis(m, r);
  for (Eigen::Index c = 0; c < r; ++c)
    scaled_basis.col(c) = w_eig.eigenvectors().col(kept[static_cast<std::size_t>(c)]) /
                          std::sqrt(w_values(kept[static_cast<std::size_t>(c)]));
  const Eigen::MatrixXd b = columns * scaled_basis;       // n x r
  const Eigen::MatrixXd small = b.transpose() * b;        // r x r

  Eigen::VectorXd raw = symmetric_eigenvalues(small);
  const double total = raw.cwiseMax(0.0).sum();
  if (!(total > 0.0))
    fail(ErrorCode::kRankDeficientBlock, "Nystrom reconstruction has zero trace");
  // The reconstruction's trace is below n when sampling misses directions;
  // normalize by it so the spectrum is a distribution.
  raw /= total;
  return summarize_spectrum(std::move(raw), static_cast<std::size_t>(n), tol);
}

SpectrumResult nystrom_vendi(const SimilarityMatrix& kernel, std::size_t m,
                             std::uint64_t seed, const Tolerances& tol) {
  const std::vector<std::size_t> indices = sample_columns(kernel.size(), m, seed);
  Eigen::MatrixXd columns(static_cast<Eigen::Index>(kernel.size()),
                          static_cast<Eigen::Index>(m));
  for (std::size_t c = 0; c < m; ++c)
    columns.col(static_cast<Eigen::Index>(c)) =
        kernel.entries().col(static_cast<Eigen::Index>(indices[c]));
  return nystrom_vendi(columns, indices, tol);
}

}  // namespace vendi
