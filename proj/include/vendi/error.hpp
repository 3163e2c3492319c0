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

#ifndef VENDI_ERROR_HPP
#define VENDI_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vendi {

// Numeric values are part of the C ABI (see vendi.h); append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNonSquare = 2,
  kNonFiniteEntry = 3,
  kDiagonalNotUnit = 4,
  kAsymmetryExceedsTolerance = 5,
  kZeroNormRow = 6,
  kDimensionMismatch = 7,
  kInvalidWeights = 8,
  kNonPositiveSigma = 9,
  kEmptyText = 10,
  kBitLengthMismatch = 11,
  kEmptyFingerprint = 12,
  kKindMismatch = 13,
  kNoNgramsAvailable = 14,
  kIoError = 15,
  kParseError = 16,
  kRaggedRows = 17,
  kNonFinite = 18,
  kEmptyLine = 19,
  kBadHex = 20,
  kLengthMismatch = 21,
  kMissingLabels = 22,
  kZeroNormVector = 23,
  kNotPositiveSemidefinite = 100,
  kEigensolverFailure = 101,
  kRankDeficientBlock = 102,
  kSpectrumNotNormalized = 103,
};

enum class ErrorCategory { kInput, kNumerical };

std::string_view error_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> row = std::nullopt,
        std::optional<std::size_t> col = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }
  /// Offending item / matrix row (0-based), when the error has one.
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }
  /// Message without the leading error name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::optional<std::size_t> row = std::nullopt,
                       std::optional<std::size_t> col = std::nullopt);

}  // namespace vendi

#endif  // VENDI_ERROR_HPP
