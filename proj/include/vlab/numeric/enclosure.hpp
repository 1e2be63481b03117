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

#ifndef VLAB_NUMERIC_ENCLOSURE_HPP_
#define VLAB_NUMERIC_ENCLOSURE_HPP_

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace vlab {

inline constexpr long kDefaultPrecisionBits = 128;

// A certified real number: the exact value lies in [lower, upper]. All
// arithmetic rounds the lower endpoint down and the upper endpoint up, so the
// result always contains the exact image of every point of the operands.
//
// The midpoint/radius view required for serialization is derived from the
// endpoints on demand.
class RealEnclosure {
 public:
  // Exact zero.
  explicit RealEnclosure(long precision_bits = kDefaultPrecisionBits);
  RealEnclosure(const RealEnclosure& other);
  RealEnclosure(RealEnclosure&& other) noexcept;
  RealEnclosure& operator=(const RealEnclosure& other);
  RealEnclosure& operator=(RealEnclosure&& other) noexcept;
  ~RealEnclosure();

  static RealEnclosure FromInteger(long value,
                                   long precision_bits = kDefaultPrecisionBits);
  static RealEnclosure FromInteger(const mpz_class& value,
                                   long precision_bits = kDefaultPrecisionBits);
  static RealEnclosure FromRational(const mpq_class& value,
                                    long precision_bits = kDefaultPrecisionBits);
  static RealEnclosure FromDouble(double value,
                                  long precision_bits = kDefaultPrecisionBits);
  // [lo, hi] rounded outward; requires lo <= hi.
  static RealEnclosure FromEndpoints(const mpq_class& lo, const mpq_class& hi,
                                     long precision_bits = kDefaultPrecisionBits);
  // Parses decimal strings; the result contains [mid - rad, mid + rad].
  static RealEnclosure FromMidRad(const std::string& mid, const std::string& rad,
                                  long precision_bits = kDefaultPrecisionBits);
  static RealEnclosure Hull(const RealEnclosure& a, const RealEnclosure& b);

  // Constants, correctly rounded outward.
  static RealEnclosure Pi(long precision_bits);
  static RealEnclosure Ln2(long precision_bits);
  static RealEnclosure E(long precision_bits);

  long precision() const { return precision_; }

  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }
  mpfr_ptr mutable_lower() { return lo_; }
  mpfr_ptr mutable_upper() { return hi_; }

  mpq_class lower_rational() const;
  mpq_class upper_rational() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  long double mid_long_double() const;
  double mid() const { return static_cast<double>(mid_long_double()); }
  // Upper bound of the radius, as a double rounded up.
  double rad() const;

  // Decimal midpoint with `digits` significant digits, and a radius string
  // bounding the distance from that printed midpoint to both endpoints.
  std::string MidString(int digits = 40) const;
  std::string RadString(int digits = 40) const;

  bool IsExact() const;  // lower == upper
  bool Contains(const mpq_class& value) const;
  bool ContainsZero() const;
  bool IsPositive() const;  // certainly > 0
  bool IsNegative() const;  // certainly < 0

  // Certain ordering; nullopt when the intervals overlap (and are not both
  // the same exact point).
  std::optional<std::strong_ordering> Compare(const RealEnclosure& other) const;
  bool CertainlyLess(const RealEnclosure& other) const;

  RealEnclosure WithPrecision(long precision_bits) const;

  RealEnclosure operator-() const;
  RealEnclosure& operator+=(const RealEnclosure& rhs);
  RealEnclosure& operator-=(const RealEnclosure& rhs);
  RealEnclosure& operator*=(const RealEnclosure& rhs);
  RealEnclosure& operator/=(const RealEnclosure& rhs);

  friend RealEnclosure operator+(RealEnclosure lhs, const RealEnclosure& rhs) {
    return lhs += rhs;
  }
  friend RealEnclosure operator-(RealEnclosure lhs, const RealEnclosure& rhs) {
    return lhs -= rhs;
  }
  friend RealEnclosure operator*(RealEnclosure lhs, const RealEnclosure& rhs) {
    return lhs *= rhs;
  }
  friend RealEnclosure operator/(RealEnclosure lhs, const RealEnclosure& rhs) {
    return lhs /= rhs;
  }
  friend RealEnclosure operator+(const RealEnclosure& lhs, long rhs);
  friend RealEnclosure operator-(const RealEnclosure& lhs, long rhs);
  friend RealEnclosure operator*(const RealEnclosure& lhs, long rhs);
  friend RealEnclosure operator/(const RealEnclosure& lhs, long rhs);
  friend RealEnclosure operator+(long lhs, const RealEnclosure& rhs) {
    return rhs + lhs;
  }
  friend RealEnclosure operator-(long lhs, const RealEnclosure& rhs) {
    return -(rhs - lhs);
  }
  friend RealEnclosure operator*(long lhs, const RealEnclosure& rhs) {
    return rhs * lhs;
  }
  friend RealEnclosure operator/(long lhs, const RealEnclosure& rhs) {
    return FromInteger(lhs, rhs.precision()) / rhs;
  }

 private:
  void Init(long precision_bits);

  long precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

RealEnclosure Abs(const RealEnclosure& x);
RealEnclosure Sqrt(const RealEnclosure& x);
RealEnclosure Log(const RealEnclosure& x);
RealEnclosure Exp(const RealEnclosure& x);
RealEnclosure Pow(const RealEnclosure& x, unsigned exponent);
RealEnclosure Max(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure Min(const RealEnclosure& a, const RealEnclosure& b);

}  // namespace vlab

#endif  // VLAB_NUMERIC_ENCLOSURE_HPP_
