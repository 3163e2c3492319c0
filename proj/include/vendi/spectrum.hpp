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

#ifndef VENDI_SPECTRUM_HPP
#define VENDI_SPECTRUM_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vendi/kernel_core.hpp"
#include "vendi/tolerances.hpp"

namespace vendi {

/// Normalized spectrum of a unit-trace PSD matrix and its diversity.
///
/// `eigenvalues` is nonincreasing, nonnegative and sums to one. It may be
/// shorter than `n` (covariance and Nystrom paths); the missing eigenvalues
/// are zero and contribute nothing to the entropy.
struct SpectrumResult {
  Eigen::VectorXd eigenvalues;
  double entropy = 0.0;  // nats
  double score = 1.0;    // exp(entropy), in [1, n]
  std::size_t n = 0;     // number of samples scored
};

/// -sum lambda log lambda, with terms below `floor` treated as 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities,
                       double floor = Tolerances{}.entropy_floor);

/// Clamps, sorts and renormalizes raw eigenvalues of a unit-trace matrix
/// built from `n` samples, then computes entropy and score.
///
/// Eigenvalues below -psd_tol_per_sample raise kNotPositiveSemidefinite.
/// A clamped sum further than spectrum_tol from one raises
/// kSpectrumNotNormalized.
SpectrumResult summarize_spectrum(Eigen::VectorXd raw, std::size_t n,
                                  const Tolerances& tol = {});

/// Eigenvalues of K/n, nonincreasing, clamped to the simplex.
Eigen::VectorXd normalized_spectrum(const SimilarityMatrix& kernel,
                                    const Tolerances& tol = {});

/// exp of the Shannon entropy of the eigenvalues of K/n.
SpectrumResult vendi_score(const SimilarityMatrix& kernel,
                           const Tolerances& tol = {});

/// Score from the eigenvalues of diag(sqrt p) K diag(sqrt p).
SpectrumResult vendi_score_weighted(const SimilarityMatrix& kernel,
                                    const WeightVector& weights,
                                    const Tolerances& tol = {});

/// Exact score through the d x d covariance (1/n) sum phi phi^T.
/// Cost O(d^2 n + d^3).
SpectrumResult vendi_score_from_features(const FeatureMatrix& features,
                                         const Tolerances& tol = {});

/// Picks the covariance route when d < n and the Gram route otherwise.
SpectrumResult vendi_score_auto(const FeatureMatrix& features,
                                const Tolerances& tol = {});

/// exp(-tr((K/n) log(K/n))), evaluated by diagonalizing K/n with a cyclic
/// Jacobi solver, forming the matrix logarithm on the support and taking the
/// trace of its product with K/n. Independent of the route used by
/// vendi_score, and intended as its cross-check.
SpectrumResult vendi_score_trace(const SimilarityMatrix& kernel,
                                 const Tolerances& tol = {});

/// `count` distinct indices drawn uniformly without replacement from [0, n),
/// returned in increasing order. Deterministic for a given seed on every
/// platform.
std::vector<std::size_t> sample_columns(std::size_t n, std::size_t count,
                                        std::uint64_t seed);

/// Approximate score from sampled kernel columns.
///
/// `columns` is the n x m block K[:, indices]. The intersection block
/// W = K[indices, indices] is pseudo-inverted with a cutoff of pinv_tol
/// times its largest eigenvalue, giving K ~ B B^T with
/// B = C U_r diag(w_r)^{-1/2}. The nonzero spectrum of B B^T is read off the
/// r x r matrix B^T B and normalized to unit sum.
SpectrumResult nystrom_vendi(const Eigen::MatrixXd& columns,
                             std::span<const std::size_t> indices,
                             const Tolerances& tol = {});

/// Convenience overload: samples `m` columns of `kernel` with `seed`.
SpectrumResult nystrom_vendi(const SimilarityMatrix& kernel, std::size_t m,
                             std::uint64_t seed, const Tolerances& tol = {});

}  // namespace vendi

#endif  // VENDI_SPECTRUM_HPP
