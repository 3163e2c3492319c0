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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "vendi/kernel_core.hpp"

using namespace vendi;
using vendi::testing::error_code_of;

namespace {

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RowMatrix rowmat(std::initializer_list<std::initializer_list<double>> rows) {
  return mat(rows);
}

}  // namespace

TEST_SUITE("kernel-core") {
  TEST_CASE("identity and symmetric unit-diagonal matrices validate") {
    const auto id = SimilarityMatrix::validate(Eigen::MatrixXd::Identity(2, 2));
    CHECK(id.size() == 2);
    const auto half = SimilarityMatrix::validate(mat({{1, 0.5}, {0.5, 1}}));
    CHECK(half(0, 1) == 0.5);
  }

  TEST_CASE("asymmetry beyond tolerance is rejected with its position") {
    try {
      SimilarityMatrix::validate(mat({{1, 0.2}, {0.9, 1}}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kAsymmetryExceedsTolerance);
      CHECK(e.row() == 0u);
      CHECK(e.col() == 1u);
    }
  }

  TEST_CASE("rounding-level asymmetry is averaged away") {
    const auto k = SimilarityMatrix::validate(mat({{1, 0.5 + 1e-12}, {0.5 - 1e-12, 1}}));
    CHECK(k(0, 1) == k(1, 0));
    CHECK(k(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("structural validation errors") {
    CHECK(error_code_of([] { SimilarityMatrix::validate(Eigen::MatrixXd::Identity(2, 3)); }) ==
          ErrorCode::kNonSquare);
    CHECK(error_code_of([] {
            SimilarityMatrix::validate(mat({{1, std::numeric_limits<double>::quiet_NaN()}, {0, 1}}));
          }) == ErrorCode::kNonFiniteEntry);
    CHECK(error_code_of([] { SimilarityMatrix::validate(mat({{1, 0}, {0, 0.9}})); }) ==
          ErrorCode::kDiagonalNotUnit);
    // Entries outside the Cauchy-Schwarz bound cannot come from a PSD kernel.
    CHECK(error_code_of([] { SimilarityMatrix::validate(mat({{1, 1.5}, {1.5, 1}})); }) ==
          ErrorCode::kNotPositiveSemidefinite);
  }

  TEST_CASE("diagonal within tolerance is accepted") {
    CHECK_NOTHROW(SimilarityMatrix::validate(mat({{1 + 5e-7, 0}, {0, 1 - 5e-7}})));
  }

  TEST_CASE("single-sample kernel is legal") {
    CHECK(SimilarityMatrix::validate(mat({{1}})).size() == 1);
  }

  TEST_CASE("principal submatrix keeps the requested order") {
    const auto k = SimilarityMatrix::validate(mat({{1, .5, 0}, {.5, 1, .25}, {0, .25, 1}}));
    const std::vector<std::size_t> idx{2, 0};
    const auto s = k.principal_submatrix(idx);
    CHECK(s.size() == 2);
    CHECK(s(0, 1) == 0.0);
    CHECK(s(1, 1) == 1.0);
  }

  TEST_CASE("gram of orthonormal rows is the identity") {
    const auto f = FeatureMatrix::from_dense(rowmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(gram_from_features(f).entries().isApprox(Eigen::MatrixXd::Identity(3, 3)));
  }

  TEST_CASE("gram of duplicated rows is all ones") {
    const auto f = FeatureMatrix::from_dense(rowmat({{1, 0}, {1, 0}}));
    CHECK(gram_from_features(f).entries() == Eigen::MatrixXd::Ones(2, 2));
  }

  TEST_CASE("rows are normalized at construction") {
    const auto f = FeatureMatrix::from_dense(rowmat({{1, 0}, {1, 1}}));
    const auto k = gram_from_features(f);
    CHECK(k(0, 1) == doctest::Approx(0.7071067811865475).epsilon(1e-15));
    CHECK(f.dense().row(1).norm() == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("zero rows are rejected with their index") {
    try {
      FeatureMatrix::from_dense(rowmat({{1, 0}, {0, 0}}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kZeroNormRow);
      CHECK(e.row() == 1u);
    }
    CHECK(error_code_of([] {
            FeatureMatrix::from_dense(rowmat({{1, std::numeric_limits<double>::infinity()}}));
          }) == ErrorCode::kNonFiniteEntry);
  }

  TEST_CASE("sparse and dense storage give the same gram and covariance") {
    std::mt19937_64 rng(7);
    RowMatrix raw = vendi::testing::random_features(rng, 12, 5);
    for (Eigen::Index i = 0; i < raw.rows(); ++i)
      for (Eigen::Index j = 0; j < raw.cols(); ++j)
        if ((i + j) % 3 == 0) raw(i, j) = 0.0;
    const auto dense = FeatureMatrix::from_dense(raw);
    const auto sparse = FeatureMatrix::from_sparse(raw.sparseView());
    CHECK(sparse.is_sparse());
    CHECK((gram_from_features(dense).entries() - gram_from_features(sparse).entries())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    CHECK((feature_covariance(dense) - feature_covariance(sparse)).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("covariance has unit trace") {
    std::mt19937_64 rng(3);
    const auto f = FeatureMatrix::from_dense(vendi::testing::random_features(rng, 40, 6));
    CHECK(feature_covariance(f).trace() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("gram columns match the full gram") {
    std::mt19937_64 rng(5);
    const auto f = FeatureMatrix::from_dense(vendi::testing::random_features(rng, 20, 4));
    const auto k = gram_from_features(f);
    const std::vector<std::size_t> idx{1, 7, 19};
    const Eigen::MatrixXd c = gram_columns(f, idx);
    for (std::size_t j = 0; j < idx.size(); ++j)
      CHECK((c.col(static_cast<Eigen::Index>(j)) -
             k.entries().col(static_cast<Eigen::Index>(idx[j])))
                .cwiseAbs()
                .maxCoeff() < 1e-15);
  }

  TEST_CASE("weight validation") {
    CHECK(WeightVector::validate({0.9, 0.1}).size() == 2);
    CHECK(error_code_of([] { WeightVector::validate({}); }) == ErrorCode::kInvalidWeights);
    CHECK(error_code_of([] { WeightVector::validate({1.2, -0.2}); }) == ErrorCode::kInvalidWeights);
    CHECK(error_code_of([] { WeightVector::validate({0.5, 0.4}); }) == ErrorCode::kInvalidWeights);
    CHECK(error_code_of([] {
            WeightVector::validate({0.5, std::numeric_limits<double>::quiet_NaN()});
          }) == ErrorCode::kInvalidWeights);
    CHECK_NOTHROW(WeightVector::validate({0.5, 0.5 + 5e-7}));
  }

  TEST_CASE("restricted weights are rescaled") {
    const auto w = WeightVector::validate({0.5, 0.3, 0.2});
    const std::vector<std::size_t> idx{1, 2};
    const auto r = w.restrict_to(idx);
    CHECK(r[0] == doctest::Approx(0.6));
    CHECK(r[1] == doctest::Approx(0.4));
  }

  TEST_CASE("weighted kernel examples") {
    const auto id = SimilarityMatrix::validate(Eigen::MatrixXd::Identity(2, 2));
    CHECK(weighted_kernel(id, WeightVector::validate({0.5, 0.5}))
              .isApprox(Eigen::Vector2d(0.5, 0.5).asDiagonal().toDenseMatrix(), 1e-15));
    const Eigen::MatrixXd w = weighted_kernel(id, WeightVector::validate({0.9, 0.1}));
    CHECK(w(0, 0) == doctest::Approx(0.9));
    CHECK(w(1, 1) == doctest::Approx(0.1));
    CHECK(w(0, 1) == 0.0);
    const auto ones = SimilarityMatrix::validate(Eigen::MatrixXd::Ones(2, 2));
    CHECK(weighted_kernel(ones, WeightVector::validate({0.5, 0.5}))
              .isApprox(Eigen::MatrixXd::Constant(2, 2, 0.5)));
    CHECK(error_code_of([&] { weighted_kernel(id, WeightVector::uniform(3)); }) ==
          ErrorCode::kDimensionMismatch);
  }

  TEST_CASE("uniform weighting equals K over n") {
    std::mt19937_64 rng(11);
    const auto k = SimilarityMatrix::validate(vendi::testing::random_kernel(rng, 9, 4));
    const Eigen::MatrixXd w = weighted_kernel(k, WeightVector::uniform(9));
    CHECK((w - k.entries() / 9.0).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("kernel kind names round-trip") {
    for (auto kind : {KernelKind::kCosine, KernelKind::kRbf, KernelKind::kNgram,
                      KernelKind::kTanimoto, KernelKind::kProbabilityProduct,
                      KernelKind::kPrecomputed})
      CHECK(parse_kernel_kind(kernel_kind_name(kind)) == kind);
    CHECK(kernel_kind_name(KernelKind::kProbabilityProduct) == "prob-product");
    CHECK(error_code_of([] { parse_kernel_kind("gaussian"); }) == ErrorCode::kInvalidArgument);
  }

  TEST_CASE("kernel spec parameter checks") {
    KernelSpec rbf{KernelKind::kRbf, 0.0, 4};
    CHECK(error_code_of([&] { rbf.validate(); }) == ErrorCode::kNonPositiveSigma);
    rbf.rbf_sigma = std::numeric_limits<double>::infinity();
    CHECK(error_code_of([&] { rbf.validate(); }) == ErrorCode::kNonPositiveSigma);
    KernelSpec ngram{KernelKind::kNgram, 1.0, 0};
    CHECK(error_code_of([&] { ngram.validate(); }) == ErrorCode::kInvalidArgument);
    ngram.ngram_max = 4;
    CHECK_NOTHROW(ngram.validate());
    CHECK(ngram.has_explicit_features());
    CHECK_FALSE(rbf.has_explicit_features());
  }

  TEST_CASE("error names and categories") {
    CHECK(error_name(ErrorCode::kNotPositiveSemidefinite) == "NotPositiveSemidefinite");
    CHECK(error_category(ErrorCode::kEigensolverFailure) == ErrorCategory::kNumerical);
    CHECK(error_category(ErrorCode::kParseError) == ErrorCategory::kInput);
    const Error e(ErrorCode::kRaggedRows, "x.csv:2: short row", 2);
    CHECK(std::string(e.what()) == "RaggedRows: x.csv:2: short row");
    CHECK(e.detail() == "x.csv:2: short row");
  }
}
