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

#include "vendi/similarity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <map>
#include <sstream>

#include "parallel.hpp"
#include "vendi/error.hpp"

namespace vendi {

namespace {

using NgramCounts = std::map<std::vector<std::string>, double>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, int order) {
  NgramCounts counts;
  const auto n = static_cast<std::size_t>(order);
  if (tokens.size() < n) return counts;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start)
    counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                                    tokens.begin() + static_cast<std::ptrdiff_t>(start + n))] += 1.0;
  return counts;
}

double squared_norm(const NgramCounts& c) {
  double s = 0.0;
  for (const auto& [key, v] : c) s += v * v;
  return s;
}

[[noreturn]] void rethrow_for_sample(const Error& e, std::size_t index) {
  std::ostringstream os;
  os << "sample " << index << ": " << e.detail();
  throw Error(e.code(), os.str(), index);
}

template <typename Pairwise>
SimilarityMatrix pairwise_matrix(std::size_t n, Pairwise&& f, const Tolerances& tol) {
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd k(size, size);
  detail::parallel_rows(n, 32, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f(i, j);
  });
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < i; ++j) k(i, j) = k(j, i);
  return SimilarityMatrix::validate(std::move(k), tol);
}

std::span<const double> row_span(const RowMatrix& m, std::size_t i) {
  return {m.row(static_cast<Eigen::Index>(i)).data(), static_cast<std::size_t>(m.cols())};
}

[[noreturn]] void kind_mismatch(const KernelSpec& spec, const SampleSet& samples) {
  std::ostringstream os;
  os << "kernel '" << kernel_kind_name(spec.kind) << "' cannot be applied to "
     << sample_kind_name(samples) << " samples";
  fail(ErrorCode::kKindMismatch, os.str());
}

void check_fingerprint_lengths(const std::vector<FingerprintSample>& fps) {
  for (std::size_t i = 1; i < fps.size(); ++i) {
    if (fps[i].bit_length() != fps[0].bit_length()) {
      std::ostringstream os;
      os << "sample " << i << " has " << fps[i].bit_length() << " bits, sample 0 has "
         << fps[0].bit_length();
      fail(ErrorCode::kBitLengthMismatch, os.str(), i);
    }
  }
}

}  // namespace

// -- sample types -------------------------------------------------------------

TextSample::TextSample(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) fail(ErrorCode::kEmptyText, "text sample has no tokens");
}

FingerprintSample::FingerprintSample(std::size_t bit_length,
                                     std::vector<std::uint64_t> words)
    : bits_(bit_length), words_(std::move(words)) {
  if (bits_ == 0) fail(ErrorCode::kInvalidArgument, "fingerprint bit length must be positive");
  if (words_.size() != (bits_ + 63) / 64)
    fail(ErrorCode::kLengthMismatch, "fingerprint word count does not match its bit length");
  if (bits_ % 64 != 0 && (words_.back() >> (bits_ % 64)) != 0)
    fail(ErrorCode::kLengthMismatch, "fingerprint has bits set beyond its declared length");
  if (popcount() == 0) fail(ErrorCode::kEmptyFingerprint, "fingerprint has no bit set");
}

FingerprintSample FingerprintSample::from_bits(std::size_t bit_length,
                                               std::span<const std::size_t> set_bits) {
  std::vector<std::uint64_t> words((bit_length + 63) / 64, 0);
  for (std::size_t b : set_bits) {
    if (b >= bit_length) fail(ErrorCode::kLengthMismatch, "bit index beyond fingerprint length");
    words[b / 64] |= std::uint64_t{1} << (b % 64);
  }
  return FingerprintSample(bit_length, std::move(words));
}

std::size_t FingerprintSample::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool FingerprintSample::test(std::size_t bit) const {
  return bit < bits_ && ((words_[bit / 64] >> (bit % 64)) & 1u) != 0;
}

ClassDistributionSample::ClassDistributionSample(std::vector<double> probs,
                                                 const Tolerances& tol)
    : probs_(std::move(probs)) {
  if (probs_.empty()) fail(ErrorCode::kInvalidArgument, "class distribution is empty");
  double sum = 0.0;
  for (std::size_t y = 0; y < probs_.size(); ++y) {
    if (!std::isfinite(probs_[y]) || probs_[y] < 0.0) {
      std::ostringstream os;
      os << "class probability " << y << " is " << probs_[y];
      fail(ErrorCode::kInvalidWeights, os.str());
    }
    sum += probs_[y];
  }
  if (std::abs(sum - 1.0) > tol.weight_tol) {
    std::ostringstream os;
    os << "class probabilities sum to " << sum << ", expected 1";
    fail(ErrorCode::kInvalidWeights, os.str());
  }
}

// -- pairwise -----------------------------------------------------------------

double cosine_similarity(std::span<const double> u, std::span<const double> v,
                         const Tolerances& tol) {
  if (u.size() != v.size()) fail(ErrorCode::kDimensionMismatch, "vectors differ in length");
  double uv = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    uv += u[k] * v[k];
    uu += u[k] * u[k];
    vv += v[k] * v[k];
  }
  const double nu = std::sqrt(uu);
  const double nv = std::sqrt(vv);
  if (nu < tol.norm_tol || nv < tol.norm_tol)
    fail(ErrorCode::kZeroNormVector, "cosine similarity of a zero-norm vector");
  return std::clamp(uv / (nu * nv), -1.0, 1.0);
}

double rbf_similarity(std::span<const double> u, std::span<const double> v,
                      double sigma) {
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    std::ostringstream os;
    os << "rbf sigma must be finite and positive, got " << sigma;
    fail(ErrorCode::kNonPositiveSigma, os.str());
  }
  if (u.size() != v.size()) fail(ErrorCode::kDimensionMismatch, "vectors differ in length");
  double sq = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double diff = u[k] - v[k];
    sq += diff * diff;
  }
  return std::exp(-sq / (2.0 * sigma * sigma));
}

double ngram_similarity(const TextSample& a, const TextSample& b, int max_n) {
  if (max_n < 1) fail(ErrorCode::kInvalidArgument, "ngram max order must be at least 1");
  double total = 0.0;
  for (int order = 1; order <= max_n; ++order) {
    const NgramCounts ca = count_ngrams(a.tokens(), order);
    const NgramCounts cb = count_ngrams(b.tokens(), order);
    if (ca.empty() && cb.empty()) {
      total += a.tokens() == b.tokens() ? 1.0 : 0.0;
      continue;
    }
    if (ca.empty() || cb.empty()) continue;
    double dot = 0.0;
    for (const auto& [key, count] : ca) {
      auto it = cb.find(key);
      if (it != cb.end()) dot += count * it->second;
    }
    total += std::min(1.0, dot / std::sqrt(squared_norm(ca) * squared_norm(cb)));
  }
  return total / static_cast<double>(max_n);
}

double tanimoto_similarity(const FingerprintSample& a, const FingerprintSample& b) {
  if (a.bit_length() != b.bit_length()) {
    std::ostringstream os;
    os << "fingerprints have " << a.bit_length() << " and " << b.bit_length() << " bits";
    fail(ErrorCode::kBitLengthMismatch, os.str());
  }
  std::size_t both = 0, either = 0;
  for (std::size_t w = 0; w < a.words().size(); ++w) {
    both += static_cast<std::size_t>(std::popcount(a.words()[w] & b.words()[w]));
    either += static_cast<std::size_t>(std::popcount(a.words()[w] | b.words()[w]));
  }
  return static_cast<double>(both) / static_cast<double>(either);
}

double probability_product_similarity(const ClassDistributionSample& a,
                                      const ClassDistributionSample& b) {
  if (a.classes() != b.classes()) {
    std::ostringstream os;
    os << "class distributions have " << a.classes() << " and " << b.classes()
       << " classes";
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
  double s = 0.0;
  for (std::size_t y = 0; y < a.classes(); ++y)
    s += std::sqrt(a.probs()[y]) * std::sqrt(b.probs()[y]);
  return std::min(1.0, s);
}

// -- sample sets --------------------------------------------------------------

namespace {
template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;
}  // namespace

std::size_t sample_count(const SampleSet& samples) {
  const auto visitor = Overloaded{
      [](const DenseSamples& d) { return static_cast<std::size_t>(d.rows.rows()); },
      [](const SimilarityMatrix& k) { return k.size(); },
      [](const auto& v) { return v.size(); }};
  return std::visit(visitor, samples);
}

std::string_view sample_kind_name(const SampleSet& samples) {
  switch (samples.index()) {
    case 0: return "dense";
    case 1: return "text";
    case 2: return "fingerprint";
    default: return "precomputed-kernel";
  }
}

SampleSet subset_samples(const SampleSet& samples, std::span<const std::size_t> indices) {
  const std::size_t n = sample_count(samples);
  for (std::size_t i : indices)
    if (i >= n) fail(ErrorCode::kInvalidArgument, "subset index out of range");

  const auto visitor = Overloaded{
      [&](const DenseSamples& d) -> SampleSet {
        DenseSamples out;
        out.rows.resize(static_cast<Eigen::Index>(indices.size()), d.rows.cols());
        for (std::size_t r = 0; r < indices.size(); ++r)
          out.rows.row(static_cast<Eigen::Index>(r)) =
              d.rows.row(static_cast<Eigen::Index>(indices[r]));
        return out;
      },
      [&](const SimilarityMatrix& k) -> SampleSet { return k.principal_submatrix(indices); },
      [&]<typename T>(const std::vector<T>& v) -> SampleSet {
        std::vector<T> out;
        out.reserve(indices.size());
        for (std::size_t i : indices) out.push_back(v[i]);
        return out;
      }};
  return std::visit(visitor, samples);
}

std::vector<ClassDistributionSample> class_distributions(const DenseSamples& samples,
                                                         const Tolerances& tol) {
  std::vector<ClassDistributionSample> out;
  out.reserve(static_cast<std::size_t>(samples.rows.rows()));
  for (Eigen::Index i = 0; i < samples.rows.rows(); ++i) {
    const auto row = row_span(samples.rows, static_cast<std::size_t>(i));
    try {
      out.emplace_back(std::vector<double>(row.begin(), row.end()), tol);
    } catch (const Error& e) {
      rethrow_for_sample(e, static_cast<std::size_t>(i));
    }
  }
  return out;
}

// -- n-gram features ----------------------------------------------------------

namespace {

struct NgramKey {
  int order;
  bool whole_text;  // indicator for texts shorter than `order`
  std::vector<std::string> tokens;

  auto operator<=>(const NgramKey&) const = default;
};

}  // namespace

FeatureMatrix ngram_features(std::span<const TextSample> texts, int max_n,
                             const Tolerances& tol) {
  if (max_n < 1) fail(ErrorCode::kInvalidArgument, "ngram max order must be at least 1");
  if (texts.empty()) fail(ErrorCode::kInvalidArgument, "no texts");

  std::map<NgramKey, Eigen::Index> columns;
  std::vector<std::vector<std::pair<const NgramKey*, double>>> entries(texts.size());
  const double block_scale = 1.0 / std::sqrt(static_cast<double>(max_n));

  for (std::size_t i = 0; i < texts.size(); ++i) {
    for (int order = 1; order <= max_n; ++order) {
      const NgramCounts counts = count_ngrams(texts[i].tokens(), order);
      if (counts.empty()) {
        auto it = columns.try_emplace(NgramKey{order, true, texts[i].tokens()}, 0).first;
        entries[i].emplace_back(&it->first, block_scale);
        continue;
      }
      const double norm = std::sqrt(squared_norm(counts));
      for (const auto& [gram, count] : counts) {
        auto it = columns.try_emplace(NgramKey{order, false, gram}, 0).first;
        entries[i].emplace_back(&it->first, block_scale * count / norm);
      }
    }
  }

  Eigen::Index next = 0;
  for (auto& [key, col] : columns) col = next++;

  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t i = 0; i < texts.size(); ++i)
    for (const auto& [key, value] : entries[i])
      triplets.emplace_back(static_cast<Eigen::Index>(i), columns.at(*key), value);

  SparseRowMatrix m(static_cast<Eigen::Index>(texts.size()), next);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return FeatureMatrix::from_sparse(std::move(m), tol);
}

// -- kernels ------------------------------------------------------------------

KernelData build_kernel(const SampleSet& samples, const KernelSpec& spec,
                        const Tolerances& tol) {
  spec.validate();
  switch (spec.kind) {
    case KernelKind::kCosine: {
      const auto* dense = std::get_if<DenseSamples>(&samples);
      if (!dense) kind_mismatch(spec, samples);
      return FeatureMatrix::from_dense(dense->rows, tol);
    }
    case KernelKind::kRbf: {
      const auto* dense = std::get_if<DenseSamples>(&samples);
      if (!dense) kind_mismatch(spec, samples);
      const std::size_t n = sample_count(samples);
      for (Eigen::Index i = 0; i < dense->rows.rows(); ++i)
        for (Eigen::Index k = 0; k < dense->rows.cols(); ++k)
          if (!std::isfinite(dense->rows(i, k)))
            fail(ErrorCode::kNonFiniteEntry, "sample has a non-finite coordinate", i, k);
      return pairwise_matrix(
          n,
          [&](std::size_t i, std::size_t j) {
            return rbf_similarity(row_span(dense->rows, i), row_span(dense->rows, j),
                                  spec.rbf_sigma);
          },
          tol);
    }
    case KernelKind::kProbabilityProduct: {
      const auto* dense = std::get_if<DenseSamples>(&samples);
      if (!dense) kind_mismatch(spec, samples);
      const auto dists = class_distributions(*dense, tol);
      return pairwise_matrix(
          dists.size(),
          [&](std::size_t i, std::size_t j) {
            return probability_product_similarity(dists[i], dists[j]);
          },
          tol);
    }
    case KernelKind::kNgram: {
      const auto* texts = std::get_if<std::vector<TextSample>>(&samples);
      if (!texts) kind_mismatch(spec, samples);
      return ngram_features(*texts, spec.ngram_max, tol);
    }
    case KernelKind::kTanimoto: {
      const auto* fps = std::get_if<std::vector<FingerprintSample>>(&samples);
      if (!fps) kind_mismatch(spec, samples);
      check_fingerprint_lengths(*fps);
      return pairwise_matrix(
          fps->size(),
          [&](std::size_t i, std::size_t j) {
            return tanimoto_similarity((*fps)[i], (*fps)[j]);
          },
          tol);
    }
    case KernelKind::kPrecomputed: {
      const auto* k = std::get_if<SimilarityMatrix>(&samples);
      if (!k) kind_mismatch(spec, samples);
      return *k;
    }
  }
  fail(ErrorCode::kInvalidArgument, "unhandled kernel kind");
}

Eigen::MatrixXd build_kernel_columns(const SampleSet& samples, const KernelSpec& spec,
                                     std::span<const std::size_t> indices,
                                     const Tolerances& tol) {
  spec.validate();
  const std::size_t n = sample_count(samples);
  for (std::size_t j : indices)
    if (j >= n) fail(ErrorCode::kInvalidArgument, "column index out of range");

  const auto fill = [&](auto&& f) {
    Eigen::MatrixXd cols(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(indices.size()));
    for (std::size_t c = 0; c < indices.size(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = f(i, indices[c]);
    return cols;
  };

  switch (spec.kind) {
    case KernelKind::kCosine:
    case KernelKind::kNgram: {
      const KernelData k = build_kernel(samples, spec, tol);
      return gram_columns(std::get<FeatureMatrix>(k), indices);
    }
    case KernelKind::kRbf: {
      const auto* dense = std::get_if<DenseSamples>(&samples);
      if (!dense) kind_mismatch(spec, samples);
      return fill([&](std::size_t i, std::size_t j) {
        return rbf_similarity(row_span(dense->rows, i), row_span(dense->rows, j), spec.rbf_sigma);
      });
    }
    case KernelKind::kProbabilityProduct: {
      const auto* dense = std::get_if<DenseSamples>(&samples);
      if (!dense) kind_mismatch(spec, samples);
      const auto dists = class_distributions(*dense, tol);
      return fill([&](std::size_t i, std::size_t j) {
        return probability_product_similarity(dists[i], dists[j]);
      });
    }
    case KernelKind::kTanimoto: {
      const auto* fps = std::get_if<std::vector<FingerprintSample>>(&samples);
      if (!fps) kind_mismatch(spec, samples);
      check_fingerprint_lengths(*fps);
      return fill([&](std::size_t i, std::size_t j) {
        return tanimoto_similarity((*fps)[i], (*fps)[j]);
      });
    }
    case KernelKind::kPrecomputed: {
      const auto* k = std::get_if<SimilarityMatrix>(&samples);
      if (!k) kind_mismatch(spec, samples);
      return fill([&](std::size_t i, std::size_t j) {
        return (*k)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      });
    }
  }
  fail(ErrorCode::kInvalidArgument, "unhandled kernel kind");
}

SimilarityMatrix to_similarity_matrix(const KernelData& kernel, const Tolerances& tol) {
  if (const auto* f = std::get_if<FeatureMatrix>(&kernel)) return gram_from_features(*f, tol);
  return std::get<SimilarityMatrix>(kernel);
}

}  // namespace vendi
