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

#ifndef VENDI_DATASET_HPP
#define VENDI_DATASET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vendi/kernel_core.hpp"
#include "vendi/similarity.hpp"

namespace vendi {

/// Homogeneous samples plus optional per-item labels and weights.
///
/// `records[i]` is the 0-based data record (input line, header excluded) that
/// produced item i; `record_count` is the number of data records read. Label
/// files are aligned to records, so skipped input lines keep labels in step.
struct Dataset {
  SampleSet samples;
  std::optional<WeightVector> weights;
  std::vector<std::string> labels;  // empty, or one per item
  std::vector<std::size_t> records;
  std::size_t record_count = 0;
  std::string source;

  std::size_t size() const { return sample_count(samples); }
  bool has_labels() const { return !labels.empty(); }
};

struct Category {
  std::string name;
  std::vector<std::size_t> indices;
};

/// Whitespace tokenization; `lowercase` folds ASCII letters only.
std::vector<std::string> tokenize(std::string_view line, bool lowercase);

Dataset make_dataset(SampleSet samples, std::string source = "<memory>");

/// Comma-separated reals, equal column count per row.
Dataset load_dense_csv(const std::string& path, bool has_header = false);

/// One UTF-8 text per line. Lines without tokens are an error unless
/// `allow_empty`, in which case they are skipped.
Dataset load_texts(const std::string& path, bool lowercase = false,
                   bool allow_empty = false);

/// One hexadecimal fingerprint per line, an optional 0x prefix, left-padded
/// with zeros to `bits` bits.
Dataset load_fingerprints(const std::string& path, std::size_t bits);

/// n rows of n comma-separated entries, validated as a similarity matrix.
SimilarityMatrix load_kernel_csv(const std::string& path,
                                 const Tolerances& tol = {});
Dataset load_kernel_dataset(const std::string& path, const Tolerances& tol = {});

/// One decimal per line.
WeightVector load_weights(const std::string& path, const Tolerances& tol = {});

/// One label per line.
std::vector<std::string> load_labels(const std::string& path);

/// Aligns `labels` (one per data record) to the dataset's items.
void attach_labels(Dataset& dataset, std::vector<std::string> labels);
void attach_weights(Dataset& dataset, WeightVector weights);

/// Label groups in order of first appearance.
std::vector<Category> group_by_label(const Dataset& dataset);

/// Items `indices` in order. Weights, when present, are rescaled to sum to one.
Dataset subset(const Dataset& dataset, std::span<const std::size_t> indices);

}  // namespace vendi

#endif  // VENDI_DATASET_HPP
