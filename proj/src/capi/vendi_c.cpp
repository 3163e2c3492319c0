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

#include "vendi/vendi.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "vendi/dataset.hpp"
#include "vendi/error.hpp"
#include "vendi/report.hpp"
#include "vendi/scoring.hpp"

struct vendi_dataset {
  vendi::Dataset dataset;
};

struct vendi_spectrum {
  vendi::SpectrumResult result;
};

struct vendi_report {
  vendi::DiversityReport report;
};

namespace {

thread_local std::string last_error;

vendi_status set_error(vendi_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
vendi_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return VENDI_OK;
  } catch (const vendi::Error& e) {
    return set_error(static_cast<vendi_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(VENDI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(VENDI_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(VENDI_ERR_INTERNAL, "unknown error");
  }
}

vendi_status null_argument(const char* name) {
  return set_error(VENDI_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

vendi::KernelSpec to_spec(const vendi_kernel_spec& spec) {
  vendi::KernelSpec out;
  switch (spec.kind) {
    case VENDI_KERNEL_COSINE: out.kind = vendi::KernelKind::kCosine; break;
    case VENDI_KERNEL_RBF: out.kind = vendi::KernelKind::kRbf; break;
    case VENDI_KERNEL_NGRAM: out.kind = vendi::KernelKind::kNgram; break;
    case VENDI_KERNEL_TANIMOTO: out.kind = vendi::KernelKind::kTanimoto; break;
    case VENDI_KERNEL_PROB_PRODUCT: out.kind = vendi::KernelKind::kProbabilityProduct; break;
    case VENDI_KERNEL_PRECOMPUTED: out.kind = vendi::KernelKind::kPrecomputed; break;
    default: vendi::fail(vendi::ErrorCode::kInvalidArgument, "unknown kernel kind");
  }
  out.rbf_sigma = spec.rbf_sigma;
  out.ngram_max = spec.ngram_max;
  return out;
}

vendi::ScoreOptions to_options(const vendi_score_options* options) {
  vendi::ScoreOptions out;
  if (options) {
    out.nystrom_columns = options->nystrom_columns;
    out.seed = options->seed;
  }
  return out;
}

template <typename Handle, typename Payload>
void emit(Handle** out, Payload&& payload) {
  *out = new Handle{std::forward<Payload>(payload)};
}

std::vector<vendi::TextSample> texts_from(const char* const* texts, size_t n, bool lowercase) {
  if (n > 0 && !texts) vendi::fail(vendi::ErrorCode::kInvalidArgument, "texts is NULL");
  std::vector<vendi::TextSample> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!texts[i]) vendi::fail(vendi::ErrorCode::kInvalidArgument, "text entry is NULL", i);
    try {
      out.emplace_back(vendi::tokenize(texts[i], lowercase));
    } catch (const vendi::Error& e) {
      throw vendi::Error(e.code(), "text " + std::to_string(i) + ": " + e.detail(), i);
    }
  }
  if (out.empty()) vendi::fail(vendi::ErrorCode::kEmptyText, "no texts");
  return out;
}

vendi::RowMatrix dense_from(const double* values, size_t n, size_t d) {
  if (n == 0 || d == 0) vendi::fail(vendi::ErrorCode::kInvalidArgument, "matrix is empty");
  if (!values) vendi::fail(vendi::ErrorCode::kInvalidArgument, "values is NULL");
  return Eigen::Map<const vendi::RowMatrix>(values, static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(d));
}

}  // namespace

extern "C" {

const char* vendi_version(void) { return VENDI_VERSION_STRING; }

const char* vendi_last_error(void) { return last_error.c_str(); }

const char* vendi_status_name(vendi_status status) {
  if (status == VENDI_OK) return "Ok";
  if (status == VENDI_ERR_INTERNAL) return "Internal";
  // error_name returns views over string literals.
  return vendi::error_name(static_cast<vendi::ErrorCode>(status)).data();
}

int vendi_status_is_numerical(vendi_status status) {
  return status >= 100 && status < VENDI_ERR_INTERNAL;
}

vendi_kernel_spec vendi_kernel_spec_default(vendi_kernel_kind kind) {
  return vendi_kernel_spec{kind, 1.0, 4};
}

vendi_status vendi_kernel_kind_from_name(const char* name, vendi_kernel_kind* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (vendi::parse_kernel_kind(name)) {
      case vendi::KernelKind::kCosine: *out = VENDI_KERNEL_COSINE; break;
      case vendi::KernelKind::kRbf: *out = VENDI_KERNEL_RBF; break;
      case vendi::KernelKind::kNgram: *out = VENDI_KERNEL_NGRAM; break;
      case vendi::KernelKind::kTanimoto: *out = VENDI_KERNEL_TANIMOTO; break;
      case vendi::KernelKind::kProbabilityProduct: *out = VENDI_KERNEL_PROB_PRODUCT; break;
      case vendi::KernelKind::kPrecomputed: *out = VENDI_KERNEL_PRECOMPUTED; break;
    }
  });
}

const char* vendi_kernel_kind_name(vendi_kernel_kind kind) {
  try {
    return vendi::kernel_kind_name(to_spec(vendi_kernel_spec_default(kind)).kind).data();
  } catch (...) {
    return "unknown";
  }
}

// -- datasets -----------------------------------------------------------------

vendi_status vendi_dataset_load_dense_csv(const char* path, int has_header,
                                          vendi_dataset** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, vendi::load_dense_csv(path, has_header != 0)); });
}

vendi_status vendi_dataset_load_texts(const char* path, int lowercase, int allow_empty,
                                      vendi_dataset** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded(
      [&] { emit(out, vendi::load_texts(path, lowercase != 0, allow_empty != 0)); });
}

vendi_status vendi_dataset_load_fingerprints(const char* path, size_t bits,
                                             vendi_dataset** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, vendi::load_fingerprints(path, bits)); });
}

vendi_status vendi_dataset_load_kernel_csv(const char* path, vendi_dataset** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, vendi::load_kernel_dataset(path)); });
}

vendi_status vendi_dataset_from_dense(const double* values, size_t n, size_t d,
                                      vendi_dataset** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    emit(out, vendi::make_dataset(vendi::DenseSamples{dense_from(values, n, d)}));
  });
}

vendi_status vendi_dataset_from_texts(const char* const* texts, size_t n, int lowercase,
                                      vendi_dataset** out) {
  if (!out) return null_argument("out");
  return guarded(
      [&] { emit(out, vendi::make_dataset(texts_from(texts, n, lowercase != 0))); });
}

vendi_status vendi_dataset_from_kernel(const double* values, size_t n,
                                       vendi_dataset** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    Eigen::MatrixXd k = dense_from(values, n, n);
    emit(out, vendi::make_dataset(vendi::SimilarityMatrix::validate(std::move(k))));
  });
}

vendi_status vendi_dataset_attach_weights_file(vendi_dataset* dataset, const char* path) {
  if (!dataset) return null_argument("dataset");
  if (!path) return null_argument("path");
  return guarded([&] { vendi::attach_weights(dataset->dataset, vendi::load_weights(path)); });
}

vendi_status vendi_dataset_attach_weights(vendi_dataset* dataset, const double* weights,
                                          size_t n) {
  if (!dataset) return null_argument("dataset");
  if (!weights) return null_argument("weights");
  return guarded([&] {
    vendi::attach_weights(dataset->dataset,
                          vendi::WeightVector::validate(std::vector<double>(weights, weights + n)));
  });
}

vendi_status vendi_dataset_attach_labels_file(vendi_dataset* dataset, const char* path) {
  if (!dataset) return null_argument("dataset");
  if (!path) return null_argument("path");
  return guarded([&] {
    try {
      vendi::attach_labels(dataset->dataset, vendi::load_labels(path));
    } catch (const vendi::Error& e) {
      if (e.code() != vendi::ErrorCode::kLengthMismatch) throw;
      throw vendi::Error(e.code(), std::string(path) + ": " + e.detail());
    }
  });
}

size_t vendi_dataset_size(const vendi_dataset* dataset) {
  return dataset ? dataset->dataset.size() : 0;
}

vendi_sample_kind vendi_dataset_sample_kind(const vendi_dataset* dataset) {
  if (!dataset) return VENDI_SAMPLES_DENSE;
  return static_cast<vendi_sample_kind>(dataset->dataset.samples.index());
}

vendi_status vendi_dataset_subset(const vendi_dataset* dataset, const size_t* indices,
                                  size_t count, vendi_dataset** out) {
  if (!dataset) return null_argument("dataset");
  if (!indices) return null_argument("indices");
  if (!out) return null_argument("out");
  return guarded([&] {
    emit(out, vendi::subset(dataset->dataset, std::span<const size_t>(indices, count)));
  });
}

void vendi_dataset_destroy(vendi_dataset* dataset) { delete dataset; }

// -- scores -------------------------------------------------------------------

vendi_status vendi_score(const vendi_dataset* dataset, const vendi_kernel_spec* spec,
                         const vendi_score_options* options, vendi_spectrum** out) {
  if (!dataset) return null_argument("dataset");
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    emit(out, vendi::score_dataset(dataset->dataset, to_spec(*spec), to_options(options)));
  });
}

double vendi_spectrum_score(const vendi_spectrum* spectrum) {
  return spectrum ? spectrum->result.score : 0.0;
}

double vendi_spectrum_entropy(const vendi_spectrum* spectrum) {
  return spectrum ? spectrum->result.entropy : 0.0;
}

size_t vendi_spectrum_sample_count(const vendi_spectrum* spectrum) {
  return spectrum ? spectrum->result.n : 0;
}

size_t vendi_spectrum_eigenvalue_count(const vendi_spectrum* spectrum) {
  return spectrum ? static_cast<size_t>(spectrum->result.eigenvalues.size()) : 0;
}

size_t vendi_spectrum_eigenvalues(const vendi_spectrum* spectrum, double* out,
                                  size_t capacity) {
  if (!spectrum || !out) return 0;
  const std::vector<double> top = vendi::top_eigenvalues(spectrum->result, capacity);
  std::copy(top.begin(), top.end(), out);
  return top.size();
}

void vendi_spectrum_destroy(vendi_spectrum* spectrum) { delete spectrum; }

vendi_status vendi_score_features(const double* values, size_t n, size_t d,
                                  vendi_spectrum** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto features = vendi::FeatureMatrix::from_dense(dense_from(values, n, d));
    emit(out, vendi::vendi_score_auto(features));
  });
}

vendi_status vendi_score_kernel(const double* values, size_t n, vendi_spectrum** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    Eigen::MatrixXd k = dense_from(values, n, n);
    emit(out, vendi::vendi_score(vendi::SimilarityMatrix::validate(std::move(k))));
  });
}

vendi_status vendi_score_texts(const char* const* texts, size_t n, int ngram_max,
                               vendi_spectrum** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    vendi::KernelSpec spec;
    spec.kind = vendi::KernelKind::kNgram;
    spec.ngram_max = ngram_max;
    emit(out, vendi::score_dataset(vendi::make_dataset(texts_from(texts, n, false)), spec));
  });
}

// -- baselines ----------------------------------------------------------------

vendi_status vendi_intdiv(const vendi_dataset* dataset, const vendi_kernel_spec* spec,
                          double* out) {
  if (!dataset) return null_argument("dataset");
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] { *out = vendi::intdiv_dataset(dataset->dataset, to_spec(*spec)); });
}

vendi_status vendi_ngram_diversity(const vendi_dataset* dataset, int order, double* out) {
  if (!dataset) return null_argument("dataset");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto* texts = std::get_if<std::vector<vendi::TextSample>>(&dataset->dataset.samples);
    if (!texts) vendi::fail(vendi::ErrorCode::kKindMismatch, "n-gram diversity needs text samples");
    *out = vendi::ngram_diversity(*texts, order);
  });
}

vendi_status vendi_ngram_diversity_mean(const vendi_dataset* dataset, int max_order,
                                        double* out) {
  if (!dataset) return null_argument("dataset");
  if (!out) return null_argument("out");
  return guarded([&] { *out = vendi::ngram_diversity_dataset(dataset->dataset, max_order).mean; });
}

vendi_status vendi_mode_diversity(const vendi_dataset* dataset, double* out) {
  if (!dataset) return null_argument("dataset");
  if (!out) return null_argument("out");
  return guarded([&] { *out = vendi::mode_diversity_dataset(dataset->dataset); });
}

// -- reports ------------------------------------------------------------------

vendi_status vendi_report_create(const vendi_dataset* dataset, const vendi_kernel_spec* spec,
                                 const vendi_score_options* options, vendi_report** out) {
  if (!dataset) return null_argument("dataset");
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    emit(out, vendi::build_report(dataset->dataset, to_spec(*spec), to_options(options)));
  });
}

size_t vendi_report_record_count(const vendi_report* report) {
  return report ? report->report.records.size() : 0;
}

vendi_status vendi_report_get_record(const vendi_report* report, size_t index,
                                     vendi_report_record* out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  if (index >= report->report.records.size())
    return set_error(VENDI_ERR_INVALID_ARGUMENT, "record index out of range");
  const vendi::CategoryRecord& r = report->report.records[index];
  out->category = r.category.c_str();
  out->n = r.n;
  out->vendi_score = r.vendi_score;
  out->entropy = r.entropy;
  out->intdiv = r.intdiv;
  out->has_ngram_diversity = r.ngram_diversity.has_value();
  out->ngram_diversity = r.ngram_diversity.value_or(0.0);
  out->has_mode_diversity = r.mode_diversity.has_value();
  out->mode_diversity = r.mode_diversity.value_or(0.0);
  out->eigenvalue_count = r.top_eigenvalues.size();
  out->eigenvalues = r.top_eigenvalues.data();
  return VENDI_OK;
}

void vendi_report_destroy(vendi_report* report) { delete report; }

}  // extern "C"
