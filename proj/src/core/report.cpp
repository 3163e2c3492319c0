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

#include "vendi/report.hpp"

#include <exception>

#include "parallel.hpp"
#include "vendi/error.hpp"

namespace vendi {

std::string_view library_version() { return VENDI_VERSION_STRING; }

namespace {

CategoryRecord score_category(const Dataset& dataset, const Category& category,
                              const KernelSpec& spec, const ScoreOptions& options,
                              const Tolerances& tol) {
  const Dataset part = subset(dataset, category.indices);
  CategoryRecord record;
  record.category = category.name;
  record.n = part.size();
  const SpectrumResult spectrum = score_dataset(part, spec, options, tol);
  record.vendi_score = spectrum.score;
  record.entropy = spectrum.entropy;
  record.top_eigenvalues = top_eigenvalues(spectrum);
  record.intdiv = intdiv_dataset(part, spec, tol);
  if (std::holds_alternative<std::vector<TextSample>>(part.samples))
    record.ngram_diversity = ngram_diversity_dataset(part, 4).mean;
  if (spec.kind == KernelKind::kProbabilityProduct)
    record.mode_diversity = mode_diversity_dataset(part, tol);
  return record;
}

}  // namespace

DiversityReport build_report(const Dataset& dataset, const KernelSpec& spec,
                             const ScoreOptions& options, const Tolerances& tol) {
  spec.validate();
  const std::vector<Category> categories = group_by_label(dataset);

  DiversityReport report;
  report.version = std::string(library_version());
  report.kernel = spec;
  report.options = options;
  report.records.resize(categories.size());
  std::vector<std::exception_ptr> errors(categories.size());

  detail::parallel_rows(categories.size(), 1, [&](std::size_t c) {
    try {
      report.records[c] = score_category(dataset, categories[c], spec, options, tol);
    } catch (const Error& e) {
      errors[c] = std::make_exception_ptr(
          Error(e.code(), "category '" + categories[c].name + "': " + e.detail(), e.row(),
                e.col()));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  });
  // Report the first failing category in label order.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

}  // namespace vendi
