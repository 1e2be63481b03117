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

#ifndef VLAB_NUMERIC_ESCALATION_HPP_
#define VLAB_NUMERIC_ESCALATION_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>

#include "vlab/error.hpp"
#include "vlab/numeric/real_spec.hpp"

namespace vlab {

// Calls attempt(bits) with bits = initial, 2*initial, ... up to max_bits
// until it returns a value. Throws kPrecisionExhausted afterwards.
template <class Attempt>
auto Escalate(long initial_bits, long max_bits, Attempt&& attempt,
              const std::string& what)
    -> typename std::invoke_result_t<Attempt, long>::value_type {
  long bits = std::min(initial_bits, max_bits);
  while (true) {
    auto result = attempt(bits);
    if (result.has_value()) return *std::move(result);
    if (bits >= max_bits) break;
    bits = std::min(bits * 2, max_bits);
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              what + " undecided at " + std::to_string(max_bits) + " bits");
}

}  // namespace vlab

#endif  // VLAB_NUMERIC_ESCALATION_HPP_
