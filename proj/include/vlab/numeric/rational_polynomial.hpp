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

#ifndef VLAB_NUMERIC_RATIONAL_POLYNOMIAL_HPP_
#define VLAB_NUMERIC_RATIONAL_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "vlab/numeric/enclosure.hpp"

namespace vlab {

// Polynomial with exact rational coefficients, constant term first. The
// highest stored coefficient is nonzero unless the polynomial is zero, in
// which case nothing is stored.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);
  RationalPolynomial(std::initializer_list<long> coefficients);

  static RationalPolynomial Monomial(const mpq_class& coefficient,
                                     int degree);

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  mpq_class coefficient(int power) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class Evaluate(const mpq_class& x) const;
  int SignAt(const mpq_class& x) const;
  RealEnclosure Evaluate(const RealEnclosure& x) const;

  RationalPolynomial Derivative() const;
  RationalPolynomial Monic() const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const mpq_class& rhs);

  friend RationalPolynomial operator+(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a *= b;
  }
  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division; throws kZeroPolynomial for a zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> DivMod(
      const RationalPolynomial& divisor) const;

  std::string ToString(const std::string& variable = "T") const;

 private:
  void Trim();

  std::vector<mpq_class> coeffs_;
};

// Monic greatest common divisor (zero if both are zero).
RationalPolynomial Gcd(RationalPolynomial a, RationalPolynomial b);

// P / gcd(P, P'), made monic.
RationalPolynomial SquarefreePart(const RationalPolynomial& p);

}  // namespace vlab

#endif  // VLAB_NUMERIC_RATIONAL_POLYNOMIAL_HPP_
