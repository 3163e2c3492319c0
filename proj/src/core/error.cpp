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

#include "vendi/error.hpp"

namespace vendi {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kDiagonalNotUnit: return "DiagonalNotUnit";
    case ErrorCode::kAsymmetryExceedsTolerance: return "AsymmetryExceedsTolerance";
    case ErrorCode::kZeroNormRow: return "ZeroNormRow";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kNonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kBitLengthMismatch: return "BitLengthMismatch";
    case ErrorCode::kEmptyFingerprint: return "EmptyFingerprint";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kNoNgramsAvailable: return "NoNgramsAvailable";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kEmptyLine: return "EmptyLine";
    case ErrorCode::kBadHex: return "BadHex";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kZeroNormVector: return "ZeroNormVector";
    case ErrorCode::kNotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::kEigensolverFailure: return "EigensolverFailure";
    case ErrorCode::kRankDeficientBlock: return "RankDeficientBlock";
    case ErrorCode::kSpectrumNotNormalized: return "SpectrumNotNormalized";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  return static_cast<int>(code) >= 100 ? ErrorCategory::kNumerical
                                       : ErrorCategory::kInput;
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> row, std::optional<std::size_t> col)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      detail_(message),
      row_(row),
      col_(col) {}

void fail(ErrorCode code, const std::string& message,
          std::optional<std::size_t> row, std::optional<std::size_t> col) {
  throw Error(code, message, row, col);
}

}  // namespace vendi
