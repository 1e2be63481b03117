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

#include "vlab/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace vlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  Trim();
}

IntPolynomial IntPolynomial::FromSmall(std::span<const std::int64_t> coefficients) {
  std::vector<mpz_class> coeffs;
  coeffs.reserve(coefficients.size());
  for (std::int64_t c : coefficients) coeffs.emplace_back(static_cast<long>(c));
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

mpz_class IntPolynomial::Height() const {
  mpz_class h = 0;
  for (const auto& c : coeffs_) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

mpz_class IntPolynomial::Content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

bool IntPolynomial::IsCanonical() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return c > 0;
  }
  return true;
}

IntPolynomial IntPolynomial::Canonical() const {
  return IsCanonical() ? *this : -*this;
}

IntPolynomial IntPolynomial::ShiftUp(int power) const {
  if (IsZero()) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(power), mpz_class(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::Translate(const mpz_class& offset) const {
  // Horner in the ring: ((c_d)(T+m) + c_{d-1})(T+m) + ...
  const IntPolynomial linear({offset, mpz_class(1)});
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + IntPolynomial(std::vector<mpz_class>{*it});
  }
  return acc;
}

RationalPolynomial IntPolynomial::ToRational() const {
  std::vector<mpq_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

std::vector<mpz_class> IntPolynomial::Padded(int length) const {
  std::vector<mpz_class> out(static_cast<std::size_t>(length), mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size() && i < out.size(); ++i) {
    out[i] = coeffs_[i];
  }
  return out;
}

std::string IntPolynomial::ToString(const std::string& variable) const {
  return ToRational().ToString(variable);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.IsZero() || b.IsZero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t length = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < length; ++i) {
    const int c = cmp(a.coefficient(static_cast<int>(i)),
                      b.coefficient(static_cast<int>(i)));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RealEnclosure EvaluateEnclosure(const IntPolynomial& p, const RealEnclosure& x) {
  RealEnclosure acc(x.precision());
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += RealEnclosure::FromInteger(*it, x.precision());
  }
  return acc;
}

}  // namespace vlab
