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

#ifndef VLAB_NUMERIC_DECIMAL_HPP_
#define VLAB_NUMERIC_DECIMAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vlab {

// Exact value of a decimal literal such as "-12.5e-3". Throws kParseError.
mpq_class ParseDecimal(std::string_view text);

// Number of digits after the decimal point (exponent ignored).
int FractionalDigits(std::string_view text);

// floor(value * 10^digits) / 10^digits printed with exactly `digits`
// fractional digits, i.e. truncation toward minus infinity.
std::string TruncateDecimal(const mpq_class& value, int digits);

// Exact decimal representation when it terminates within `max_digits`
// fractional digits, otherwise empty.
std::string ExactDecimal(const mpq_class& value, int max_digits = 60);

}  // namespace vlab

#endif  // VLAB_NUMERIC_DECIMAL_HPP_
