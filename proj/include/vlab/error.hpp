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

#ifndef VLAB_ERROR_HPP_
#define VLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlab {

// Domain errors raised by the library. Every code maps to exit status 1 in
// the command line tool; usage errors are handled there separately.
enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kUnsupportedSpec,
  kInsufficientDigits,
  kPrecisionExhausted,
  kZeroPolynomial,
  kNotIsolating,
  kRootCountMismatch,
  kNoSignChange,
  kNoRootInRange,
  kExactZeroDetected,
  kDegreeOverflow,
  kIndexOutOfRange,
  kDependentBase,
  kDegenerateRecords,
  kBudgetExceeded,
  kEmptyInput,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return ErrorCodeName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace vlab

#endif  // VLAB_ERROR_HPP_
