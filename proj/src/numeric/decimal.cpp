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

#include "vlab/numeric/decimal.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "vlab/error.hpp"

namespace vlab {
namespace {

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

[[noreturn]] void Fail(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "not a decimal number: '" + std::string(text) + "'");
}

}  // namespace

mpq_class ParseDecimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  int fractional = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fractional;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) Fail(text);
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') Fail(text);
    const std::string tail(text.substr(pos + 1));
    if (tail.empty()) Fail(text);
    char* end = nullptr;
    exponent = std::strtol(tail.c_str(), &end, 10);
    if (*end != '\0') Fail(text);
  }
  mpq_class value(mpz_class(digits, 10));
  const long shift = exponent - fractional;
  if (shift >= 0) {
    value *= mpq_class(PowerOfTen(static_cast<unsigned long>(shift)));
  } else {
    value /= mpq_class(PowerOfTen(static_cast<unsigned long>(-shift)));
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

int FractionalDigits(std::string_view text) {
  const auto point = text.find('.');
  if (point == std::string_view::npos) return 0;
  int count = 0;
  for (std::size_t i = point + 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
    ++count;
  }
  return count;
}

std::string TruncateDecimal(const mpq_class& value, int digits) {
  const mpz_class scale = PowerOfTen(static_cast<unsigned long>(digits));
  mpz_class scaled = value.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(),
             value.get_den().get_mpz_t());
  const bool negative = scaled < 0;
  mpz_class magnitude = abs(scaled);
  std::string body = magnitude.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

std::string ExactDecimal(const mpq_class& value, int max_digits) {
  for (int digits = 0; digits <= max_digits; ++digits) {
    const mpq_class scaled = value * mpq_class(PowerOfTen(digits));
    if (scaled.get_den() == 1) return TruncateDecimal(value, digits);
  }
  return {};
}

}  // namespace vlab
