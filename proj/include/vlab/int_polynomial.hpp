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

#ifndef VLAB_INT_POLYNOMIAL_HPP_
#define VLAB_INT_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vlab/numeric/rational_polynomial.hpp"

namespace vlab {

// Integer polynomial, constant term first, trailing zero coefficients
// trimmed. Height is the largest absolute coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);
  static IntPolynomial FromSmall(std::span<const std::int64_t> coefficients);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(int power) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  mpz_class Height() const;
  mpz_class Content() const;

  // First nonzero coefficient (lowest power) made positive.
  IntPolynomial Canonical() const;
  bool IsCanonical() const;

  // T^power * P.
  IntPolynomial ShiftUp(int power) const;
  // P(T + offset).
  IntPolynomial Translate(const mpz_class& offset) const;

  RationalPolynomial ToRational() const;
  // Coefficient vector padded with zeros to `length` entries.
  std::vector<mpz_class> Padded(int length) const;

  std::string ToString(const std::string& variable = "T") const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  // Lexicographic on the coefficient vectors (constant term first), shorter
  // vectors padded with zeros.
  friend std::strong_ordering operator<=>(const IntPolynomial& a,
                                          const IntPolynomial& b);

 private:
  void Trim();

  std::vector<mpz_class> coeffs_;
};

// Horner evaluation with outward rounding; contains P(x) for every real x in
// the enclosure.
RealEnclosure EvaluateEnclosure(const IntPolynomial& p, const RealEnclosure& x);

}  // namespace vlab

#endif  // VLAB_INT_POLYNOMIAL_HPP_
