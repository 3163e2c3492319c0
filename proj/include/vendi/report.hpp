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

#ifndef VENDI_REPORT_HPP
#define VENDI_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vendi/scoring.hpp"

namespace vendi {

std::string_view library_version();

struct CategoryRecord {
  std::string category;
  std::size_t n = 0;
  double vendi_score = 0.0;
  double entropy = 0.0;
  double intdiv = 0.0;
  std::optional<double> ngram_diversity;  // text samples only
  std::optional<double> mode_diversity;   // prob-product kernel only
  std::vector<double> top_eigenvalues;    // at most 10
};

struct DiversityReport {
  std::string version;
  KernelSpec kernel;
  ScoreOptions options;
  std::vector<CategoryRecord> records;  // label first-appearance order
};

/// Per-category diversity of a labelled dataset. Each record is computed by
/// the same routine as score_dataset on the category subset, so a record
/// equals a standalone score of that subset. Categories are scored
/// concurrently; record order does not depend on scheduling.
DiversityReport build_report(const Dataset& dataset, const KernelSpec& spec,
                             const ScoreOptions& options = {},
                             const Tolerances& tol = {});

}  // namespace vendi

#endif  // VENDI_REPORT_HPP
