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

#include "vendi/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "vendi/error.hpp"

namespace vendi {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string text;
};

std::vector<Line> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, path + ": cannot open file");
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    lines.push_back({number, std::move(text)});
  }
  if (in.bad()) fail(ErrorCode::kIoError, path + ": read error");
  return lines;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\v\f") == std::string_view::npos;
}

// Trailing blank lines are a file-ending artifact, not records.
void drop_trailing_blank(std::vector<Line>& lines) {
  while (!lines.empty() && is_blank(lines.back().text)) lines.pop_back();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(ErrorCode code, const std::string& path, std::size_t line,
                          const std::string& what) {
  std::ostringstream os;
  os << path << ":" << line << ": " << what;
  fail(code, os.str(), line);
}

std::vector<double> parse_csv_row(const std::string& path, const Line& line) {
  std::vector<double> values;
  std::string_view rest = line.text;
  std::size_t column = 0;
  for (;;) {
    ++column;
    const auto comma = rest.find(',');
    std::string_view field = trim(rest.substr(0, comma));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      std::ostringstream os;
      os << "column " << column << ": cannot parse '" << trim(rest.substr(0, comma))
         << "' as a number";
      fail_at(ErrorCode::kParseError, path, line.number, os.str());
    }
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "column " << column << ": value is not finite";
      fail_at(ErrorCode::kNonFinite, path, line.number, os.str());
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

struct Table {
  RowMatrix rows;
  std::vector<std::size_t> line_numbers;
};

Table read_table(const std::string& path, bool has_header) {
  std::vector<Line> lines = read_lines(path);
  drop_trailing_blank(lines);
  std::size_t first = has_header && !lines.empty() ? 1 : 0;
  if (lines.size() <= first) fail(ErrorCode::kParseError, path + ": no data rows");

  std::vector<std::vector<double>> parsed;
  Table table;
  for (std::size_t l = first; l < lines.size(); ++l) {
    if (is_blank(lines[l].text))
      fail_at(ErrorCode::kParseError, path, lines[l].number, "empty line");
    parsed.push_back(parse_csv_row(path, lines[l]));
    if (parsed.back().size() != parsed.front().size()) {
      std::ostringstream os;
      os << "row has " << parsed.back().size() << " columns, expected "
         << parsed.front().size();
      fail_at(ErrorCode::kRaggedRows, path, lines[l].number, os.str());
    }
    table.line_numbers.push_back(lines[l].number);
  }
  table.rows.resize(static_cast<Eigen::Index>(parsed.size()),
                    static_cast<Eigen::Index>(parsed.front().size()));
  for (std::size_t r = 0; r < parsed.size(); ++r)
    for (std::size_t c = 0; c < parsed[r].size(); ++c)
      table.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parsed[r][c];
  return table;
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) extra = 0;
    else if ((c >> 5) == 0x6 && c >= 0xC2) extra = 1;
    else if ((c >> 4) == 0xE) extra = 2;
    else if ((c >> 3) == 0x1E && c <= 0xF4) extra = 3;
    else return false;
    if (i + extra >= s.size() && extra > 0) return false;
    for (std::size_t k = 1; k <= extra; ++k)
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    i += extra + 1;
  }
  return true;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view line, bool lowercase) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    if (i > start) {
      std::string tok(line.substr(start, i - start));
      if (lowercase)
        for (char& c : tok)
          if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

Dataset make_dataset(SampleSet samples, std::string source) {
  Dataset ds{std::move(samples), std::nullopt, {}, {}, 0, std::move(source)};
  ds.records = iota_indices(ds.size());
  ds.record_count = ds.records.size();
  return ds;
}

Dataset load_dense_csv(const std::string& path, bool has_header) {
  Table table = read_table(path, has_header);
  return make_dataset(DenseSamples{std::move(table.rows)}, path);
}

Dataset load_texts(const std::string& path, bool lowercase, bool allow_empty) {
  std::vector<Line> lines = read_lines(path);
  drop_trailing_blank(lines);
  std::vector<TextSample> texts;
  std::vector<std::size_t> records;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (!valid_utf8(lines[l].text))
      fail_at(ErrorCode::kParseError, path, lines[l].number, "invalid UTF-8");
    std::vector<std::string> tokens = tokenize(lines[l].text, lowercase);
    if (tokens.empty()) {
      if (allow_empty) continue;
      fail_at(ErrorCode::kEmptyLine, path, lines[l].number, "line has no tokens");
    }
    texts.emplace_back(std::move(tokens));
    records.push_back(l);
  }
  if (texts.empty()) fail(ErrorCode::kEmptyText, path + ": no texts");
  Dataset ds = make_dataset(std::move(texts), path);
  ds.records = std::move(records);
  ds.record_count = lines.size();
  return ds;
}

Dataset load_fingerprints(const std::string& path, std::size_t bits) {
  if (bits == 0) fail(ErrorCode::kInvalidArgument, "fingerprint bit length must be positive");
  std::vector<Line> lines = read_lines(path);
  drop_trailing_blank(lines);
  if (lines.empty()) fail(ErrorCode::kParseError, path + ": no fingerprints");

  const std::size_t max_digits = (bits + 3) / 4;
  std::vector<FingerprintSample> fps;
  for (const Line& line : lines) {
    std::string_view hex = trim(line.text);
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
      hex.remove_prefix(2);
    if (hex.empty()) fail_at(ErrorCode::kBadHex, path, line.number, "empty fingerprint");
    // Leading zeros are left padding and never count against the length.
    while (hex.size() > 1 && hex.front() == '0') hex.remove_prefix(1);
    if (hex.size() > max_digits) {
      std::ostringstream os;
      os << hex.size() << " hex digits exceed " << bits << " bits";
      fail_at(ErrorCode::kLengthMismatch, path, line.number, os.str());
    }
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const int v = hex_value(hex[hex.size() - 1 - k]);
      if (v < 0) {
        std::ostringstream os;
        os << "'" << hex[hex.size() - 1 - k] << "' is not a hex digit";
        fail_at(ErrorCode::kBadHex, path, line.number, os.str());
      }
      for (int b = 0; b < 4; ++b) {
        if (((v >> b) & 1) == 0) continue;
        const std::size_t bit = 4 * k + static_cast<std::size_t>(b);
        if (bit >= bits) {
          std::ostringstream os;
          os << "bit " << bit << " is set but the fingerprint has " << bits << " bits";
          fail_at(ErrorCode::kLengthMismatch, path, line.number, os.str());
        }
        words[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
    }
    try {
      fps.emplace_back(bits, std::move(words));
    } catch (const Error& e) {
      fail_at(e.code(), path, line.number, e.detail());
    }
  }
  return make_dataset(std::move(fps), path);
}

SimilarityMatrix load_kernel_csv(const std::string& path, const Tolerances& tol) {
  Table table = read_table(path, false);
  if (table.rows.rows() != table.rows.cols()) {
    std::ostringstream os;
    os << path << ": kernel has " << table.rows.rows() << " rows of "
       << table.rows.cols() << " entries";
    fail(ErrorCode::kNonSquare, os.str());
  }
  try {
    return SimilarityMatrix::validate(Eigen::MatrixXd(table.rows), tol);
  } catch (const Error& e) {
    if (e.row()) fail_at(e.code(), path, table.line_numbers.at(*e.row()), e.detail());
    throw Error(e.code(), path + ": " + e.detail());
  }
}

Dataset load_kernel_dataset(const std::string& path, const Tolerances& tol) {
  return make_dataset(load_kernel_csv(path, tol), path);
}

WeightVector load_weights(const std::string& path, const Tolerances& tol) {
  std::vector<Line> lines = read_lines(path);
  drop_trailing_blank(lines);
  std::vector<double> p;
  for (const Line& line : lines) {
    const std::vector<double> row = parse_csv_row(path, line);
    if (row.size() != 1) fail_at(ErrorCode::kParseError, path, line.number, "expected one value");
    p.push_back(row[0]);
  }
  try {
    return WeightVector::validate(std::move(p), tol);
  } catch (const Error& e) {
    if (e.row()) fail_at(e.code(), path, lines.at(*e.row()).number, e.detail());
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::vector<std::string> load_labels(const std::string& path) {
  std::vector<Line> lines = read_lines(path);
  drop_trailing_blank(lines);
  std::vector<std::string> labels;
  for (const Line& line : lines) {
    std::string_view label = trim(line.text);
    if (label.empty()) fail_at(ErrorCode::kEmptyLine, path, line.number, "empty label");
    labels.emplace_back(label);
  }
  return labels;
}

void attach_labels(Dataset& dataset, std::vector<std::string> labels) {
  if (labels.size() != dataset.record_count) {
    std::ostringstream os;
    os << "got " << labels.size() << " labels for " << dataset.record_count
       << " input records";
    fail(ErrorCode::kLengthMismatch, os.str());
  }
  std::vector<std::string> aligned;
  aligned.reserve(dataset.size());
  for (std::size_t r : dataset.records) aligned.push_back(labels.at(r));
  dataset.labels = std::move(aligned);
}

void attach_weights(Dataset& dataset, WeightVector weights) {
  if (weights.size() != dataset.size()) {
    std::ostringstream os;
    os << "got " << weights.size() << " weights for " << dataset.size() << " items";
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
  dataset.weights = std::move(weights);
}

std::vector<Category> group_by_label(const Dataset& dataset) {
  if (!dataset.has_labels()) fail(ErrorCode::kMissingLabels, "dataset has no labels");
  std::vector<Category> groups;
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
    auto [it, inserted] = position.try_emplace(dataset.labels[i], groups.size());
    if (inserted) groups.push_back({dataset.labels[i], {}});
    groups[it->second].indices.push_back(i);
  }
  return groups;
}

Dataset subset(const Dataset& dataset, std::span<const std::size_t> indices) {
  if (indices.empty()) fail(ErrorCode::kInvalidArgument, "empty subset");
  Dataset out = make_dataset(subset_samples(dataset.samples, indices), dataset.source);
  if (dataset.weights) out.weights = dataset.weights->restrict_to(indices);
  if (dataset.has_labels())
    for (std::size_t i : indices) out.labels.push_back(dataset.labels[i]);
  return out;
}

}  // namespace vendi
