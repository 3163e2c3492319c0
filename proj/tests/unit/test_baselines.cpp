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
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "vendi/baselines.hpp"
#include "vendi/dataset.hpp"
#include "vendi/spectrum.hpp"

using namespace vendi;
using vendi::testing::error_code_of;

namespace {

TextSample text(const std::string& s) { return TextSample(tokenize(s, false)); }

std::vector<TextSample> texts(std::initializer_list<const char*> lines) {
  std::vector<TextSample> out;
  for (const char* l : lines) out.push_back(text(l));
  return out;
}

ClassDistributionSample dist(std::initializer_list<double> p) {
  return ClassDistributionSample(std::vector<double>(p));
}

// exp(H((0.9, 0.1))), evaluated directly.
constexpr double kSkewedPairScore = 1.384145488461686;

}  // namespace

TEST_SUITE("baselines") {
  TEST_CASE("intdiv examples") {
    CHECK(intdiv(SimilarityMatrix::validate(Eigen::MatrixXd::Ones(4, 4))) == 0.0);
    for (int n : {1, 2, 5, 10})
      CHECK(intdiv(SimilarityMatrix::validate(Eigen::MatrixXd::Identity(n, n))) ==
            doctest::Approx(1.0 - 1.0 / n).epsilon(1e-15));
    Eigen::MatrixXd k(3, 3);
    k << 1, 0.5, 0, 0.5, 1, 0, 0, 0, 1;
    CHECK(intdiv(SimilarityMatrix::validate(k)) ==
          doctest::Approx(0.5555555555555556).epsilon(1e-15));
  }

  TEST_CASE("intdiv from features matches the kernel form") {
    std::mt19937_64 rng(12);
    const auto f = FeatureMatrix::from_dense(vendi::testing::random_features(rng, 25, 6));
    const auto k = gram_from_features(f);
    CHECK(std::abs(intdiv(f) - intdiv(k)) < 1e-14);
    CHECK(intdiv(k) + k.entries().sum() / (25.0 * 25.0) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("ngram diversity examples") {
    CHECK(ngram_diversity(texts({"a a a a"}), 1) == 0.25);
    CHECK(ngram_diversity(texts({"w", "w", "w"}), 1) == doctest::Approx(1.0 / 3));
    CHECK(ngram_diversity(texts({"x y", "y z"}), 2) == 1.0);
    CHECK(error_code_of([] { ngram_diversity(texts({"a b", "c"}), 3); }) ==
          ErrorCode::kNoNgramsAvailable);
    CHECK(error_code_of([] { ngram_diversity(texts({"a b"}), 0); }) ==
          ErrorCode::kInvalidArgument);
  }

  TEST_CASE("ngram diversity profile skips unavailable orders") {
    const auto corpus = texts({"a b c d", "a b c e", "x y z", "x y w", "q r s t"});
    const auto profile = ngram_diversity_profile(corpus, 4);
    REQUIRE(profile.per_order.size() == 4);
    CHECK(*profile.per_order[0] == doctest::Approx(0.7222222222222222).epsilon(1e-15));
    CHECK(*profile.per_order[1] == doctest::Approx(0.7692307692307693).epsilon(1e-15));
    CHECK(*profile.per_order[2] == 0.875);
    CHECK(*profile.per_order[3] == 1.0);
    CHECK(profile.mean == doctest::Approx((0.7222222222222222 + 0.7692307692307693 + 0.875 + 1.0) / 4));

    const auto short_texts = texts({"a b", "b c"});
    const auto partial = ngram_diversity_profile(short_texts, 4);
    CHECK(partial.per_order[2] == std::nullopt);
    CHECK(partial.per_order[3] == std::nullopt);
    CHECK(partial.mean == doctest::Approx((0.75 + 1.0) / 2));
  }

  TEST_CASE("mode diversity examples") {
    std::vector<ClassDistributionSample> spread;
    for (int c = 0; c < 10; ++c) {
      std::vector<double> p(10, 0.0);
      p[static_cast<std::size_t>(c)] = 1.0;
      spread.emplace_back(p);
    }
    CHECK(mode_diversity(spread) == doctest::Approx(10.0).epsilon(1e-14));

    const std::vector<ClassDistributionSample> same{dist({0, 1, 0}), dist({0, 1, 0})};
    CHECK(mode_diversity(same) == 1.0);

    std::vector<ClassDistributionSample> skew;
    for (int i = 0; i < 9; ++i) skew.push_back(dist({1, 0}));
    skew.push_back(dist({0, 1}));
    CHECK(std::abs(mode_diversity(skew) - kSkewedPairScore) < 1e-12);

    const std::vector<ClassDistributionSample> soft{dist({0.7, 0.2, 0.1}), dist({0.1, 0.8, 0.1}),
                                                    dist({0.2, 0.2, 0.6})};
    CHECK(mode_diversity(soft) == doctest::Approx(2.9599980601104128).epsilon(1e-14));

    const std::vector<ClassDistributionSample> ragged{dist({1, 0}), dist({0, 0, 1})};
    CHECK(error_code_of([&] { mode_diversity(ragged); }) == ErrorCode::kDimensionMismatch);
  }

  TEST_CASE("mode diversity equals the weighted score on a diagonal kernel") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t classes = vendi::testing::uniform_index(rng, 2, 12);
      std::vector<ClassDistributionSample> samples;
      for (int i = 0; i < 15; ++i) samples.emplace_back(vendi::testing::random_simplex(rng, classes));
      std::vector<double> mean(classes, 0.0);
      for (const auto& s : samples)
        for (std::size_t c = 0; c < classes; ++c) mean[c] += s.probs()[c] / 15.0;
      const auto id = SimilarityMatrix::validate(
          Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(classes), static_cast<Eigen::Index>(classes)));
      const double weighted = vendi_score_weighted(id, WeightVector::validate(mean)).score;
      const double md = mode_diversity(samples);
      CHECK(std::abs(md - weighted) < 1e-10);
      CHECK(md >= 1.0 - 1e-12);
      CHECK(md <= static_cast<double>(classes) + 1e-12);
    }
  }
}
