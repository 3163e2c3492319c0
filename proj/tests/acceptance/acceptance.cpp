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

// Acceptance checks. Each criterion prints exactly one line:
//
//   PASS <name>: <measured values>
//   FAIL <name>: <measured values>
//
// With no arguments every criterion runs; otherwise only the named ones.
// The exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "json.hpp"
#include "test_support.hpp"
#include "vendi/baselines.hpp"
#include "vendi/dataset.hpp"
#include "vendi/kernel_core.hpp"
#include "vendi/scoring.hpp"
#include "vendi/spectrum.hpp"

namespace {

using vendi::FeatureMatrix;
using vendi::RowMatrix;
using vendi::SimilarityMatrix;
using vendi::WeightVector;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double score(const Eigen::MatrixXd& k) {
  return vendi::vendi_score(SimilarityMatrix::validate(k)).score;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Ranks starting at 1, ties receiving their average rank.
std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
    i = j + 1;
  }
  return r;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

// -- criteria -----------------------------------------------------------------

Outcome effective_number() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const Eigen::Index n : {1, 2, 10, 50, 500}) {
    worst = std::max(worst, std::abs(score(Eigen::MatrixXd::Identity(n, n)) - double(n)));
    worst = std::max(worst, std::abs(score(Eigen::MatrixXd::Ones(n, n)) - 1.0));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 5.0,
          format("max |error| %.3g over n in {1,2,10,50,500} (tol 1e-9), %.2f s (limit 5 s)",
                 worst, elapsed)};
}

// Items carry a shape and a colour; similarity is 1 when both agree, 1/2 when
// one agrees and 0 otherwise. Mode j uses shape j and colour j.
Outcome mode_count_toy() {
  constexpr int kPerMode = 5;
  double worst_vs = 0.0, worst_intdiv = 0.0;
  std::vector<double> scores;
  for (const int modes : {1, 2, 4, 8}) {
    std::vector<std::pair<int, int>> items;
    for (int j = 0; j < modes; ++j)
      for (int c = 0; c < kPerMode; ++c) items.emplace_back(j, j);
    const auto n = static_cast<Eigen::Index>(items.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        k(a, b) = 0.5 * ((items[a].first == items[b].first) + (items[a].second == items[b].second));
    const auto kernel = SimilarityMatrix::validate(k);
    const double vs = vendi::vendi_score(kernel).score;
    scores.push_back(vs);
    worst_vs = std::max(worst_vs, std::abs(vs - modes));
    worst_intdiv = std::max(worst_intdiv, std::abs(vendi::intdiv(kernel) - (1.0 - 1.0 / modes)));
  }
  const double doubling = scores[2] / scores[1];
  const bool pass = worst_vs <= 1e-9 && worst_intdiv <= 1e-9 && std::abs(doubling - 2.0) <= 1e-9;
  return {pass, format("max |VS - m| %.3g, max |IntDiv - (1 - 1/m)| %.3g, VS(4)/VS(2) = %.12g "
                       "(tol 1e-9)",
                       worst_vs, worst_intdiv, doubling)};
}

Outcome trace_route_equivalence() {
  std::mt19937_64 rng(0x7ace);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = vendi::testing::uniform_index(rng, 1, 50);
    const std::size_t d = vendi::testing::uniform_index(rng, 1, 60);
    const auto kernel = SimilarityMatrix::validate(vendi::testing::random_kernel(rng, n, d));
    worst = std::max(worst, std::abs(vendi::vendi_score(kernel).score -
                                     vendi::vendi_score_trace(kernel).score));
  }
  return {worst <= 1e-8,
          format("max |eigenvalue route - trace route| %.3g over 100 kernels (tol 1e-8)", worst)};
}

Outcome covariance_fast_path() {
  std::mt19937_64 rng(0xc0fa);
  constexpr int kTrials = 50;
  double worst = 0.0, gram_seconds = 0.0, cov_seconds = 0.0;
  const auto start = Clock::now();
  for (int t = 0; t < kTrials; ++t) {
    const auto features = FeatureMatrix::from_dense(vendi::testing::random_features(rng, 2000, 32));
    auto t0 = Clock::now();
    const double gram = vendi::vendi_score(vendi::gram_from_features(features)).score;
    gram_seconds += seconds_since(t0);
    t0 = Clock::now();
    const double cov = vendi::vendi_score_from_features(features).score;
    cov_seconds += seconds_since(t0);
    worst = std::max(worst, std::abs(gram - cov));
  }
  const double total = seconds_since(start);
  const double speedup = gram_seconds / cov_seconds;
  return {worst <= 1e-8 && speedup >= 5.0 && total < 60.0,
          format("max |gram - covariance| %.3g (tol 1e-8), speedup %.0fx (min 5x), "
                 "%.1f s total (limit 60 s)",
                 worst, speedup, total)};
}

Outcome axiom_suite() {
  std::mt19937_64 rng(0xa1);
  // Partitioning: a block-diagonal kernel over k equal blocks with a shared
  // score scores k times that score.
  double partition = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t blocks = vendi::testing::uniform_index(rng, 2, 5);
    const std::size_t size = vendi::testing::uniform_index(rng, 2, 12);
    const Eigen::MatrixXd block = vendi::testing::random_kernel(rng, size, 4);
    const auto n = static_cast<Eigen::Index>(blocks * size);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t b = 0; b < blocks; ++b)
      k.block(b * size, b * size, size, size) = block;
    partition = std::max(partition, std::abs(score(k) - double(blocks) * score(block)));
  }
  // Permutation invariance.
  double permutation = 0.0;
  const Eigen::MatrixXd base = vendi::testing::random_kernel(rng, 30, 6);
  const double base_score = score(base);
  for (int t = 0; t < 200; ++t) {
    Eigen::VectorXi order = Eigen::VectorXi::LinSpaced(30, 0, 29);
    std::shuffle(order.data(), order.data() + order.size(), rng);
    const Eigen::PermutationMatrix<Eigen::Dynamic> perm(order);
    const Eigen::MatrixXd permuted = perm * base * perm.transpose();
    permutation = std::max(permutation, std::abs(score(permuted) - base_score));
  }
  // Identical elements: duplicating item 0 under uniform weights equals
  // putting weight 2/(n+1) on it in the original set.
  double duplicate = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = vendi::testing::uniform_index(rng, 2, 20);
    const auto features = vendi::testing::random_features(rng, n, 5);
    RowMatrix with_copy(n + 1, 5);
    with_copy.topRows(n) = features;
    with_copy.row(n) = features.row(0);
    const auto dup = vendi::gram_from_features(FeatureMatrix::from_dense(with_copy));
    std::vector<double> p(n, 1.0 / double(n + 1));
    p[0] = 2.0 / double(n + 1);
    const double merged = vendi::vendi_score_weighted(
        vendi::gram_from_features(FeatureMatrix::from_dense(features)),
        WeightVector::validate(p)).score;
    duplicate = std::max(duplicate, std::abs(vendi::vendi_score(dup).score - merged));
  }
  return {partition <= 1e-8 && permutation <= 1e-10 && duplicate <= 1e-10,
          format("partition %.3g (tol 1e-8), permutation %.3g over 200 (tol 1e-10), "
                 "duplicate merge %.3g (tol 1e-10)",
                 partition, permutation, duplicate)};
}

Outcome diagonal_reduction() {
  std::mt19937_64 rng(0xd1a9);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = vendi::testing::uniform_index(rng, 1, 40);
    const auto p = vendi::testing::random_simplex(rng, n);
    const double weighted =
        vendi::vendi_score_weighted(SimilarityMatrix::validate(Eigen::MatrixXd::Identity(n, n)),
                                    WeightVector::validate(p)).score;
    worst = std::max(worst, std::abs(weighted - std::exp(vendi::testing::shannon(p))));
  }
  // Stated fixture: p = (0.9, 0.1) with expected score 1.38424.
  const double fixture =
      vendi::vendi_score_weighted(SimilarityMatrix::validate(Eigen::MatrixXd::Identity(2, 2)),
                                  WeightVector::validate({0.9, 0.1})).score;
  const double fixture_error = std::abs(fixture - 1.38424);
  return {worst <= 1e-10 && fixture_error <= 1e-5,
          format("max |VS_p(I) - exp H(p)| %.3g over 100 p (tol 1e-10); "
                 "p=(0.9,0.1) gives %.9f vs stated 1.38424, |diff| %.3g (tol 1e-5)",
                 worst, fixture, fixture_error)};
}

// Ten Gaussian modes in R^16 centred at 3 e_j with per-coordinate standard
// deviation 0.25; subset i draws 500 points uniformly from modes 0..i-1.
Outcome mode_dropping() {
  const auto start = Clock::now();
  std::mt19937_64 rng(0x40de);
  std::normal_distribution<double> noise(0.0, 0.25);
  std::vector<double> counts, vs, intdiv;
  const vendi::KernelSpec spec{vendi::KernelKind::kRbf, 1.0};
  for (int classes = 1; classes <= 10; ++classes) {
    RowMatrix points(500, 16);
    for (Eigen::Index r = 0; r < points.rows(); ++r) {
      const auto mode = vendi::testing::uniform_index(rng, 0, classes - 1);
      for (Eigen::Index c = 0; c < 16; ++c) points(r, c) = noise(rng);
      points(r, static_cast<Eigen::Index>(mode)) += 3.0;
    }
    const auto dataset = vendi::make_dataset(vendi::DenseSamples{points});
    counts.push_back(classes);
    vs.push_back(vendi::score_dataset(dataset, spec).score);
    intdiv.push_back(vendi::intdiv_dataset(dataset, spec));
  }
  const double rho = spearman(vs, counts);
  const double r_vs = pearson(vs, counts);
  const double r_intdiv = pearson(intdiv, counts);
  const double elapsed = seconds_since(start);
  return {rho >= 0.95 && r_vs > r_intdiv && elapsed < 120.0,
          format("Spearman(VS, classes) %.4f (min 0.95), Pearson VS %.4f vs IntDiv %.4f, "
                 "VS range [%.3f, %.3f], %.2f s (limit 120 s)",
                 rho, r_vs, r_intdiv, vs.front(), vs.back(), elapsed)};
}

// Equal-weight mixtures of k normals on the line, centres 10 apart, standard
// deviation 0.05, 500 draws each, scored with a unit-bandwidth RBF kernel.
// A single mode scores slightly above one, by an amount that grows with the
// ratio of its spread to the bandwidth, and that excess is multiplied by k.
Outcome separated_mixtures() {
  std::mt19937_64 rng(0x5e9a);
  std::normal_distribution<double> noise(0.0, 0.05);
  const vendi::KernelSpec spec{vendi::KernelKind::kRbf, 1.0};
  double worst = 0.0;
  std::vector<double> intdiv;
  std::string scores;
  for (int k = 1; k <= 5; ++k) {
    RowMatrix points(500, 1);
    for (Eigen::Index r = 0; r < points.rows(); ++r)
      points(r, 0) = 10.0 * double(vendi::testing::uniform_index(rng, 0, k - 1)) + noise(rng);
    const auto dataset = vendi::make_dataset(vendi::DenseSamples{points});
    const double vs = vendi::score_dataset(dataset, spec).score;
    worst = std::max(worst, std::abs(vs - k));
    intdiv.push_back(vendi::intdiv_dataset(dataset, spec));
    scores += format("%s%.3f", k == 1 ? "" : ",", vs);
  }
  bool shrinking = true;
  for (std::size_t i = 2; i < intdiv.size(); ++i)
    shrinking = shrinking && (intdiv[i] - intdiv[i - 1]) < (intdiv[i - 1] - intdiv[i - 2]);
  return {worst <= 0.25 && shrinking,
          format("VS for k=1..5 = %s, max |VS - k| %.3f (tol 0.25), IntDiv increments %s",
                 scores.c_str(), worst, shrinking ? "shrinking" : "not shrinking")};
}

Outcome nystrom_low_rank() {
  std::mt19937_64 rng(0x9e57);
  // Rank-2 kernel from unit vectors in the plane.
  const auto kernel = SimilarityMatrix::validate(vendi::testing::random_kernel(rng, 100, 2));
  const double exact = vendi::vendi_score(kernel).score;
  double recovery = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    recovery = std::max(recovery, std::abs(vendi::nystrom_vendi(kernel, 8, seed).score - exact));
  // Mean absolute error over 20 seeds as the number of sampled columns grows.
  // Past the rank the error sits at rounding level, so increases below 1e-9
  // are not counted.
  const std::vector<std::size_t> grid{1, 2, 4, 8, 16, 32, 64, 100};
  std::vector<double> mae;
  for (const std::size_t m : grid) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      sum += std::abs(vendi::nystrom_vendi(kernel, m, seed).score - exact);
    mae.push_back(sum / 20.0);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < mae.size(); ++i) monotone = monotone && mae[i] <= mae[i - 1] + 1e-9;
  return {recovery <= 1e-6 && monotone,
          format("rank 2, n=100, m=8: max |error| %.3g over 20 seeds (tol 1e-6); "
                 "MAE m=1 %.3g, m=2 %.3g, m=100 %.3g, %s",
                 recovery, mae.front(), mae[1], mae.back(),
                 monotone ? "nonincreasing" : "increasing somewhere")};
}

Outcome cli_determinism() {
  using vendi::testing::fixture;
  using vendi::testing::run_cli;
  vendi::testing::TempDir dir;
  std::mt19937_64 rng(0xc11);
  // A labelled corpus of random sentences over a small vocabulary.
  const std::vector<std::string> vocab{"red", "blue", "cat", "dog", "runs", "sleeps", "fast", "the"};
  const std::vector<std::string> genres{"news", "poems", "recipes"};
  std::vector<std::string> lines, labels;
  for (int i = 0; i < 60; ++i) {
    std::string line;
    const std::size_t words = vendi::testing::uniform_index(rng, 2, 7);
    for (std::size_t w = 0; w < words; ++w)
      line += (w ? " " : "") + vocab[vendi::testing::uniform_index(rng, 0, vocab.size() - 1)];
    lines.push_back(line);
    labels.push_back(genres[vendi::testing::uniform_index(rng, 0, genres.size() - 1)]);
  }
  std::string corpus, label_file;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    corpus += lines[i] + "\n";
    label_file += labels[i] + "\n";
  }
  const auto corpus_path = dir.write("corpus.txt", corpus);
  const auto labels_path = dir.write("labels.txt", label_file);

  const std::vector<std::string> commands{
      "score --input " + corpus_path,
      "report --input " + corpus_path + " --labels " + labels_path,
      "report --input " + corpus_path + " --labels " + labels_path + " --format tsv",
      "score --kernel precomputed --input " + fixture("identity50.csv") + " --nystrom 9 --seed 5",
      "score --kernel rbf --input " + fixture("points.csv") + " --format tsv",
  };
  int identical = 0;
  for (const auto& args : commands) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    identical += (a.exit_code == 0 && a.out == b.out && !a.out.empty());
  }

  const auto report = nlohmann::json::parse(
      run_cli("report --input " + corpus_path + " --labels " + labels_path).out);
  int matching = 0, categories = 0;
  for (const auto& record : report["categories"]) {
    ++categories;
    std::string subset;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (labels[i] == record["category"]) subset += lines[i] + "\n";
    const auto path = dir.write(record["category"].get<std::string>() + ".txt", subset);
    const auto standalone = nlohmann::json::parse(run_cli("score --input " + path).out);
    matching += standalone["score"] == record["vendi_score"] &&
                standalone["eigenvalues_top10"] == record["eigenvalues_top10"];
  }
  const int runs = static_cast<int>(commands.size());
  return {identical == runs && categories == static_cast<int>(genres.size()) &&
              matching == categories,
          format("%d/%d commands byte-identical across reruns, %d/%d report records equal "
                 "standalone scores",
                 identical, runs, matching, categories)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"effective-number", effective_number},
      {"mode-count-toy", mode_count_toy},
      {"trace-route-equivalence", trace_route_equivalence},
      {"covariance-fast-path", covariance_fast_path},
      {"axiom-suite", axiom_suite},
      {"diagonal-reduction", diagonal_reduction},
      {"mode-dropping", mode_dropping},
      {"separated-mixtures", separated_mixtures},
      {"nystrom-low-rank", nystrom_low_rank},
      {"cli-determinism", cli_determinism},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected) {
    if (std::none_of(criteria.begin(), criteria.end(),
                     [&](const Criterion& c) { return name == c.name; })) {
      std::fprintf(stderr, "unknown criterion: %s\n", name.c_str());
      return 2;
    }
  }
  int failures = 0;
  for (const auto& criterion : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.name) == selected.end())
      continue;
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", criterion.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
