// Copyright 2026 The vlab Authors
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

#include "vlab/error.hpp"

namespace vlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kUnsupportedSpec:
      return "UnsupportedSpec";
    case ErrorCode::kInsufficientDigits:
      return "InsufficientDigits";
    case ErrorCode::kPrecisionExhausted:
      return "PrecisionExhausted";
    case ErrorCode::kZeroPolynomial:
      return "ZeroPolynomial";
    case ErrorCode::kNotIsolating:
      return "NotIsolating";
    case ErrorCode::kRootCountMismatch:
      return "RootCountMismatch";
    case ErrorCode::kNoSignChange:
      return "NoSignChange";
    case ErrorCode::kNoRootInRange:
      return "NoRootInRange";
    case ErrorCode::kExactZeroDetected:
      return "ExactZeroDetected";
    case ErrorCode::kDegreeOverflow:
      return "DegreeOverflow";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kDependentBase:
      return "DependentBase";
    case ErrorCode::kDegenerateRecords:
      return "DegenerateRecords";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
  }
  return "Unknown";
}

}  // namespace vlab
