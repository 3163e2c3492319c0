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

// Command-line front end: scores a file of samples and prints JSON or TSV.
// Output is assembled in memory and written only after every step succeeded,
// so a failing run never leaves partial output behind.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vendi/vendi.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInternal = 1;
constexpr std::size_t kTopEigenvalues = 10;

struct Options {
  std::string command;
  std::optional<std::string> kernel;
  std::string input;
  std::optional<std::string> weights;
  std::optional<std::string> labels;
  double rbf_sigma = 1.0;
  int ngram_max = 4;
  std::optional<std::size_t> bits;
  std::size_t nystrom = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool lowercase = false;
  bool header = false;
  bool allow_empty = false;
};

// Failure raised by the library (carries its status) or by the front end.
struct Failure {
  vendi_status status;
  std::string message;
};

void check(vendi_status status) {
  if (status != VENDI_OK) throw Failure{status, vendi_last_error()};
}

[[noreturn]] void input_error(const std::string& message) {
  throw Failure{VENDI_ERR_INVALID_ARGUMENT,
                std::string(vendi_status_name(VENDI_ERR_INVALID_ARGUMENT)) + ": " + message};
}

struct DatasetDeleter {
  void operator()(vendi_dataset* d) const { vendi_dataset_destroy(d); }
};
struct SpectrumDeleter {
  void operator()(vendi_spectrum* s) const { vendi_spectrum_destroy(s); }
};
struct ReportDeleter {
  void operator()(vendi_report* r) const { vendi_report_destroy(r); }
};
using DatasetPtr = std::unique_ptr<vendi_dataset, DatasetDeleter>;
using SpectrumPtr = std::unique_ptr<vendi_spectrum, SpectrumDeleter>;
using ReportPtr = std::unique_ptr<vendi_report, ReportDeleter>;

// Six significant digits, trailing zeros kept so golden files stay stable.
std::string number(double value) {
  if (value == 0.0) value = 0.0;  // fold negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", value);
  return buf;
}

// Eigenvalues are fractions of a unit sum; anything below this is rounding
// noise from the eigensolver and is printed as zero so golden files do not
// depend on the last bits of a particular LAPACK-style reduction.
constexpr double kEigenvalueDisplayFloor = 1e-12;

std::string eigenvalue(double value) {
  return number(std::abs(value) < kEigenvalueDisplayFloor ? 0.0 : value);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string extension_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return {};
  std::string ext = path.substr(dot);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

bool reads_csv(vendi_kernel_kind kind) {
  return kind == VENDI_KERNEL_COSINE || kind == VENDI_KERNEL_RBF ||
         kind == VENDI_KERNEL_PROB_PRODUCT || kind == VENDI_KERNEL_PRECOMPUTED;
}

// Picks the kernel: explicit flag, else by input extension; never guesses further.
vendi_kernel_kind resolve_kernel(const Options& opt) {
  const std::string ext = extension_of(opt.input);
  if (opt.command == "ngram-div") {
    if (opt.kernel && *opt.kernel != "ngram")
      input_error("ngram-div works on texts and requires --kernel ngram, got '" + *opt.kernel + "'");
    return VENDI_KERNEL_NGRAM;
  }
  if (opt.command == "mode-div") {
    if (opt.kernel && *opt.kernel != "prob-product")
      input_error("mode-div works on class distributions and requires --kernel prob-product, got '" +
                  *opt.kernel + "'");
    return VENDI_KERNEL_PROB_PRODUCT;
  }
  vendi_kernel_kind kind;
  if (opt.kernel) {
    check(vendi_kernel_kind_from_name(opt.kernel->c_str(), &kind));
  } else if (ext == ".txt") {
    kind = VENDI_KERNEL_NGRAM;
  } else if (ext == ".csv") {
    kind = VENDI_KERNEL_COSINE;
  } else {
    input_error(opt.input + ": cannot infer the kernel from the file extension; pass --kernel");
  }
  if (ext == ".csv" && !reads_csv(kind))
    throw Failure{VENDI_ERR_KIND_MISMATCH,
                  std::string(vendi_status_name(VENDI_ERR_KIND_MISMATCH)) + ": " + opt.input +
                      ": kernel '" + vendi_kernel_kind_name(kind) + "' does not read CSV input"};
  if (ext == ".txt" && reads_csv(kind))
    throw Failure{VENDI_ERR_KIND_MISMATCH,
                  std::string(vendi_status_name(VENDI_ERR_KIND_MISMATCH)) + ": " + opt.input +
                      ": kernel '" + vendi_kernel_kind_name(kind) + "' needs CSV input"};
  return kind;
}

DatasetPtr load_dataset(const Options& opt, vendi_kernel_kind kind) {
  vendi_dataset* raw = nullptr;
  switch (kind) {
    case VENDI_KERNEL_NGRAM:
      check(vendi_dataset_load_texts(opt.input.c_str(), opt.lowercase, opt.allow_empty, &raw));
      break;
    case VENDI_KERNEL_TANIMOTO:
      if (!opt.bits) input_error("--kernel tanimoto requires --bits");
      check(vendi_dataset_load_fingerprints(opt.input.c_str(), *opt.bits, &raw));
      break;
    case VENDI_KERNEL_PRECOMPUTED:
      check(vendi_dataset_load_kernel_csv(opt.input.c_str(), &raw));
      break;
    default:
      check(vendi_dataset_load_dense_csv(opt.input.c_str(), opt.header, &raw));
      break;
  }
  DatasetPtr dataset(raw);
  if (opt.weights) check(vendi_dataset_attach_weights_file(dataset.get(), opt.weights->c_str()));
  if (opt.labels) check(vendi_dataset_attach_labels_file(dataset.get(), opt.labels->c_str()));
  return dataset;
}

vendi_kernel_spec make_spec(const Options& opt, vendi_kernel_kind kind) {
  vendi_kernel_spec spec = vendi_kernel_spec_default(kind);
  spec.rbf_sigma = opt.rbf_sigma;
  spec.ngram_max = opt.ngram_max;
  return spec;
}

// Echo of the kernel configuration, listing only parameters that apply.
std::string kernel_json(const Options& opt, vendi_kernel_kind kind) {
  std::string out = "{\"kind\": " + json_string(vendi_kernel_kind_name(kind));
  if (kind == VENDI_KERNEL_RBF) out += ", \"rbf_sigma\": " + number(opt.rbf_sigma);
  if (kind == VENDI_KERNEL_NGRAM) out += ", \"ngram_max\": " + std::to_string(opt.ngram_max);
  if (kind == VENDI_KERNEL_TANIMOTO && opt.bits) out += ", \"bits\": " + std::to_string(*opt.bits);
  if (opt.nystrom > 0)
    out += ", \"nystrom\": " + std::to_string(opt.nystrom) + ", \"seed\": " + std::to_string(opt.seed);
  if (opt.weights) out += ", \"weighted\": true";
  return out + "}";
}

std::string kernel_tsv(const Options& opt, vendi_kernel_kind kind) {
  std::string out = vendi_kernel_kind_name(kind);
  if (kind == VENDI_KERNEL_RBF) out += ";rbf_sigma=" + number(opt.rbf_sigma);
  if (kind == VENDI_KERNEL_NGRAM) out += ";ngram_max=" + std::to_string(opt.ngram_max);
  if (kind == VENDI_KERNEL_TANIMOTO && opt.bits) out += ";bits=" + std::to_string(*opt.bits);
  if (opt.nystrom > 0)
    out += ";nystrom=" + std::to_string(opt.nystrom) + ";seed=" + std::to_string(opt.seed);
  if (opt.weights) out += ";weighted";
  return out;
}

std::string join_eigenvalues(const std::vector<double>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += eigenvalue(values[i]);
  }
  return out;
}

// One scalar metric, rendered in the shared single-record shape.
struct Metric {
  std::string name;
  double score = 0.0;
  std::size_t n = 0;
  std::vector<double> eigenvalues;
};

std::string render(const Metric& m, const Options& opt, vendi_kernel_kind kind) {
  if (opt.format == "tsv") {
    return "metric\tscore\tn\tkernel\teigenvalues_top10\n" + m.name + "\t" + number(m.score) +
           "\t" + std::to_string(m.n) + "\t" + kernel_tsv(opt, kind) + "\t" +
           join_eigenvalues(m.eigenvalues, ",") + "\n";
  }
  return "{\"metric\": " + json_string(m.name) + ", \"score\": " + number(m.score) +
         ", \"n\": " + std::to_string(m.n) + ", \"kernel\": " + kernel_json(opt, kind) +
         ", \"eigenvalues_top10\": [" + join_eigenvalues(m.eigenvalues, ", ") + "]}\n";
}

std::string run_score(const Options& opt, vendi_kernel_kind kind, const vendi_dataset* ds) {
  const vendi_kernel_spec spec = make_spec(opt, kind);
  const vendi_score_options options{opt.nystrom, opt.seed};
  vendi_spectrum* raw = nullptr;
  check(vendi_score(ds, &spec, &options, &raw));
  SpectrumPtr spectrum(raw);
  Metric m{"vendi", vendi_spectrum_score(raw), vendi_spectrum_sample_count(raw), {}};
  m.eigenvalues.resize(kTopEigenvalues);
  m.eigenvalues.resize(vendi_spectrum_eigenvalues(raw, m.eigenvalues.data(), kTopEigenvalues));
  return render(m, opt, kind);
}

std::string run_intdiv(const Options& opt, vendi_kernel_kind kind, const vendi_dataset* ds) {
  if (opt.nystrom > 0) input_error("--nystrom applies to score and report only");
  const vendi_kernel_spec spec = make_spec(opt, kind);
  Metric m{"intdiv", 0.0, vendi_dataset_size(ds), {}};
  check(vendi_intdiv(ds, &spec, &m.score));
  return render(m, opt, kind);
}

std::string run_ngram_div(const Options& opt, const vendi_dataset* ds) {
  if (opt.nystrom > 0) input_error("--nystrom applies to score and report only");
  if (opt.ngram_max < 1) input_error("--ngram-max must be at least 1");
  Metric m{"ngram-div", 0.0, vendi_dataset_size(ds), {}};
  check(vendi_ngram_diversity_mean(ds, opt.ngram_max, &m.score));

  // Per-order values; orders with no n-grams are reported as null.
  std::vector<std::optional<double>> per_order;
  for (int order = 1; order <= opt.ngram_max; ++order) {
    double value = 0.0;
    const vendi_status status = vendi_ngram_diversity(ds, order, &value);
    if (status == VENDI_ERR_NO_NGRAMS_AVAILABLE) {
      per_order.emplace_back();
    } else {
      check(status);
      per_order.emplace_back(value);
    }
  }
  const auto cell = [](const std::optional<double>& v, const char* missing) {
    return v ? number(*v) : std::string(missing);
  };
  if (opt.format == "tsv") {
    std::string out = "metric\tscore\tn\tkernel";
    for (int order = 1; order <= opt.ngram_max; ++order) out += "\tdiv" + std::to_string(order);
    out += "\n" + m.name + "\t" + number(m.score) + "\t" + std::to_string(m.n) + "\t" +
           kernel_tsv(opt, VENDI_KERNEL_NGRAM);
    for (const auto& v : per_order) out += "\t" + cell(v, "");
    return out + "\n";
  }
  std::string orders;
  for (std::size_t i = 0; i < per_order.size(); ++i) {
    if (i) orders += ", ";
    orders += json_string(std::to_string(i + 1)) + ": " + cell(per_order[i], "null");
  }
  return "{\"metric\": " + json_string(m.name) + ", \"score\": " + number(m.score) +
         ", \"n\": " + std::to_string(m.n) +
         ", \"kernel\": " + kernel_json(opt, VENDI_KERNEL_NGRAM) +
         ", \"eigenvalues_top10\": [], \"per_order\": {" + orders + "}}\n";
}

std::string run_mode_div(const Options& opt, const vendi_dataset* ds) {
  if (opt.nystrom > 0) input_error("--nystrom applies to score and report only");
  Metric m{"mode-div", 0.0, vendi_dataset_size(ds), {}};
  check(vendi_mode_diversity(ds, &m.score));
  return render(m, opt, VENDI_KERNEL_PROB_PRODUCT);
}

std::string run_report(const Options& opt, vendi_kernel_kind kind, const vendi_dataset* ds) {
  if (!opt.labels)
    throw Failure{VENDI_ERR_MISSING_LABELS,
                  std::string(vendi_status_name(VENDI_ERR_MISSING_LABELS)) +
                      ": report requires --labels"};
  const vendi_kernel_spec spec = make_spec(opt, kind);
  const vendi_score_options options{opt.nystrom, opt.seed};
  vendi_report* raw = nullptr;
  check(vendi_report_create(ds, &spec, &options, &raw));
  ReportPtr report(raw);

  const std::size_t count = vendi_report_record_count(raw);
  std::vector<vendi_report_record> records(count);
  for (std::size_t i = 0; i < count; ++i) check(vendi_report_get_record(raw, i, &records[i]));

  const auto eigenvalues = [](const vendi_report_record& r) {
    return std::vector<double>(r.eigenvalues, r.eigenvalues + r.eigenvalue_count);
  };

  if (opt.format == "tsv") {
    std::string out =
        "category\tn\tvendi_score\tintdiv\tngram_diversity\tmode_diversity\teigenvalues_top10\n";
    for (const auto& r : records) {
      out += std::string(r.category) + "\t" + std::to_string(r.n) + "\t" + number(r.vendi_score) +
             "\t" + number(r.intdiv) + "\t" +
             (r.has_ngram_diversity ? number(r.ngram_diversity) : "") + "\t" +
             (r.has_mode_diversity ? number(r.mode_diversity) : "") + "\t" +
             join_eigenvalues(eigenvalues(r), ",") + "\n";
    }
    return out;
  }
  std::string out = "{\"metric\": \"report\", \"version\": " + json_string(vendi_version()) +
                    ", \"kernel\": " + kernel_json(opt, kind) + ", \"categories\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i) out += ", ";
    out += "{\"category\": " + json_string(r.category) + ", \"n\": " + std::to_string(r.n) +
           ", \"vendi_score\": " + number(r.vendi_score) + ", \"intdiv\": " + number(r.intdiv);
    if (r.has_ngram_diversity) out += ", \"ngram_diversity\": " + number(r.ngram_diversity);
    if (r.has_mode_diversity) out += ", \"mode_diversity\": " + number(r.mode_diversity);
    out += ", \"eigenvalues_top10\": [" + join_eigenvalues(eigenvalues(r), ", ") + "]}";
  }
  return out + "]}\n";
}

std::string run(const Options& opt) {
  const vendi_kernel_kind kind = resolve_kernel(opt);
  if (kind == VENDI_KERNEL_RBF && !(opt.rbf_sigma > 0.0))
    throw Failure{VENDI_ERR_NON_POSITIVE_SIGMA,
                  std::string(vendi_status_name(VENDI_ERR_NON_POSITIVE_SIGMA)) +
                      ": --rbf-sigma must be positive"};
  const DatasetPtr dataset = load_dataset(opt, kind);
  if (opt.command == "score") return run_score(opt, kind, dataset.get());
  if (opt.command == "intdiv") return run_intdiv(opt, kind, dataset.get());
  if (opt.command == "ngram-div") return run_ngram_div(opt, dataset.get());
  if (opt.command == "mode-div") return run_mode_div(opt, dataset.get());
  return run_report(opt, kind, dataset.get());
}

void add_common_flags(CLI::App& cmd, Options& opt) {
  cmd.add_option("--kernel", opt.kernel, "Similarity kernel")
      ->check(CLI::IsMember(
          {"cosine", "rbf", "ngram", "tanimoto", "prob-product", "precomputed"}));
  cmd.add_option("--input", opt.input, "Input file (CSV, text lines, hex fingerprints)")
      ->required();
  cmd.add_option("--weights", opt.weights, "Per-sample probabilities, one per line");
  cmd.add_option("--labels", opt.labels, "Category label per sample, one per line");
  cmd.add_option("--rbf-sigma", opt.rbf_sigma, "RBF bandwidth")->capture_default_str();
  cmd.add_option("--ngram-max", opt.ngram_max, "Largest n-gram order")->capture_default_str();
  cmd.add_option("--bits", opt.bits, "Fingerprint width in bits");
  cmd.add_option("--nystrom", opt.nystrom, "Nystrom landmark columns (0 = exact)")
      ->capture_default_str();
  cmd.add_option("--seed", opt.seed, "Seed for landmark sampling")->capture_default_str();
  cmd.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  cmd.add_flag("--lowercase", opt.lowercase, "Lowercase text before tokenizing");
  cmd.add_flag("--header", opt.header, "Skip the first row of a dense CSV");
  cmd.add_flag("--allow-empty", opt.allow_empty, "Skip empty text lines instead of failing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vendi Score: diversity of a sample set from its similarity spectrum", "vendi"};
  app.set_version_flag("--version", std::string(vendi_version()));
  app.require_subcommand(1);

  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"score", "Vendi Score of the input"},
      {"intdiv", "Internal diversity (one minus mean pairwise similarity)"},
      {"ngram-div", "Distinct n-gram ratio of a text corpus"},
      {"mode-div", "Exponential entropy of the mean class distribution"},
      {"report", "Per-category diversity report grouped by --labels"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_flags(*cmd, opt);
    cmd->callback([&opt, name = std::string(name)] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const std::string output = run(opt);
    std::fwrite(output.data(), 1, output.size(), stdout);
    return std::fflush(stdout) == 0 ? 0 : kExitInternal;
  } catch (const Failure& f) {
    std::fprintf(stderr, "vendi: error: %s\n", f.message.c_str());
    if (f.status == VENDI_ERR_INTERNAL) return kExitInternal;
    return vendi_status_is_numerical(f.status) ? kExitNumerical : kExitInput;
  }
}
