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

#include "vlab/numeric/enclosure.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "vlab/error.hpp"
#include "vlab/numeric/decimal.hpp"

namespace vlab {
namespace {

// Raises the working precision of `x` in place; increasing precision is exact.
void Widen(RealEnclosure& x, long precision_bits) {
  if (precision_bits <= x.precision()) return;
  x = x.WithPrecision(precision_bits);
}

std::string FormatMpfr(const char* format, int digits, mpfr_srcptr value) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, format, digits, value);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

mpq_class MpfrToRational(mpfr_srcptr value) {
  mpq_class out;
  mpfr_get_q(out.get_mpq_t(), value);
  return out;
}

}  // namespace

void RealEnclosure::Init(long precision_bits) {
  precision_ = std::max<long>(precision_bits, MPFR_PREC_MIN);
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
}

RealEnclosure::RealEnclosure(long precision_bits) {
  Init(precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealEnclosure::RealEnclosure(const RealEnclosure& other) {
  Init(other.precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& other) noexcept {
  Init(other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& other) {
  if (this == &other) return *this;
  if (precision_ != other.precision_) {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
    Init(other.precision_);
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealEnclosure RealEnclosure::FromInteger(long value, long precision_bits) {
  RealEnclosure out(precision_bits);
  mpfr_set_si(out.lo_, value, MPFR_RNDD);
  mpfr_set_si(out.hi_, value, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::FromInteger(const mpz_class& value,
                                         long precision_bits) {
  RealEnclosure out(precision_bits);
  mpfr_set_z(out.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, value.get_mpz_t(), MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::FromRational(const mpq_class& value,
                                          long precision_bits) {
  RealEnclosure out(precision_bits);
  mpfr_set_q(out.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, value.get_mpq_t(), MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::FromDouble(double value, long precision_bits) {
  RealEnclosure out(std::max<long>(precision_bits, 53));
  mpfr_set_d(out.lo_, value, MPFR_RNDD);
  mpfr_set_d(out.hi_, value, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::FromEndpoints(const mpq_class& lo,
                                           const mpq_class& hi,
                                           long precision_bits) {
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidArgument, "enclosure endpoints out of order");
  }
  RealEnclosure out(precision_bits);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::FromMidRad(const std::string& mid,
                                        const std::string& rad,
                                        long precision_bits) {
  const mpq_class m = ParseDecimal(mid);
  const mpq_class r = ParseDecimal(rad);
  if (r < 0) throw Error(ErrorCode::kParseError, "negative radius: " + rad);
  return FromEndpoints(m - r, m + r, precision_bits);
}

RealEnclosure RealEnclosure::Hull(const RealEnclosure& a,
                                  const RealEnclosure& b) {
  RealEnclosure out(std::max(a.precision_, b.precision_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::Pi(long precision_bits) {
  RealEnclosure out(precision_bits);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::Ln2(long precision_bits) {
  RealEnclosure out(precision_bits);
  mpfr_const_log2(out.lo_, MPFR_RNDD);
  mpfr_const_log2(out.hi_, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::E(long precision_bits) {
  return Exp(FromInteger(1, precision_bits));
}

mpq_class RealEnclosure::lower_rational() const { return MpfrToRational(lo_); }
mpq_class RealEnclosure::upper_rational() const { return MpfrToRational(hi_); }
double RealEnclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealEnclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

long double RealEnclosure::mid_long_double() const {
  mpfr_t m;
  mpfr_init2(m, precision_ + 2);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const long double out = mpfr_get_ld(m, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

double RealEnclosure::rad() const {
  mpfr_t r;
  mpfr_init2(r, precision_);
  mpfr_sub(r, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(r, r, 1, MPFR_RNDU);
  const double out = mpfr_get_d(r, MPFR_RNDU);
  mpfr_clear(r);
  return out;
}

std::string RealEnclosure::MidString(int digits) const {
  mpfr_t m;
  mpfr_init2(m, precision_ + 2);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  std::string out = mpfr_zero_p(m) ? std::string("0")
                                   : FormatMpfr("%.*Re", digits - 1, m);
  mpfr_clear(m);
  return out;
}

std::string RealEnclosure::RadString(int digits) const {
  if (IsExact()) {
    // The midpoint string may still round an exact binary value.
    const mpq_class printed = ParseDecimal(MidString(digits));
    if (printed == lower_rational()) return "0";
  }
  const mpq_class printed = ParseDecimal(MidString(digits));
  mpq_class radius = upper_rational() - printed;
  const mpq_class other = printed - lower_rational();
  if (other > radius) radius = other;
  if (radius == 0) return "0";
  mpfr_t r;
  mpfr_init2(r, 64);
  mpfr_set_q(r, radius.get_mpq_t(), MPFR_RNDU);
  std::string out = FormatMpfr("%.*RUe", 5, r);
  mpfr_clear(r);
  return out;
}

bool RealEnclosure::IsExact() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool RealEnclosure::Contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool RealEnclosure::ContainsZero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealEnclosure::IsPositive() const { return mpfr_sgn(lo_) > 0; }
bool RealEnclosure::IsNegative() const { return mpfr_sgn(hi_) < 0; }

std::optional<std::strong_ordering> RealEnclosure::Compare(
    const RealEnclosure& other) const {
  if (mpfr_less_p(hi_, other.lo_)) return std::strong_ordering::less;
  if (mpfr_greater_p(lo_, other.hi_)) return std::strong_ordering::greater;
  if (IsExact() && other.IsExact() && mpfr_equal_p(lo_, other.lo_)) {
    return std::strong_ordering::equal;
  }
  return std::nullopt;
}

bool RealEnclosure::CertainlyLess(const RealEnclosure& other) const {
  return mpfr_less_p(hi_, other.lo_) != 0;
}

RealEnclosure RealEnclosure::WithPrecision(long precision_bits) const {
  RealEnclosure out(precision_bits);
  mpfr_set(out.lo_, lo_, MPFR_RNDD);
  mpfr_set(out.hi_, hi_, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::operator-() const {
  RealEnclosure out(precision_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

RealEnclosure& RealEnclosure::operator+=(const RealEnclosure& rhs) {
  Widen(*this, rhs.precision_);
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

RealEnclosure& RealEnclosure::operator-=(const RealEnclosure& rhs) {
  Widen(*this, rhs.precision_);
  mpfr_t lo;
  mpfr_init2(lo, precision_);
  mpfr_sub(lo, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo, lo_);
  mpfr_clear(lo);
  return *this;
}

RealEnclosure& RealEnclosure::operator*=(const RealEnclosure& rhs) {
  Widen(*this, rhs.precision_);
  mpfr_t p[4];
  mpfr_t q[4];
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  for (int i = 0; i < 4; ++i) {
    mpfr_init2(p[i], precision_);
    mpfr_init2(q[i], precision_);
    mpfr_mul(p[i], a[i / 2], b[i % 2], MPFR_RNDD);
    mpfr_mul(q[i], a[i / 2], b[i % 2], MPFR_RNDU);
  }
  mpfr_set(lo_, p[0], MPFR_RNDD);
  mpfr_set(hi_, q[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i) {
    mpfr_min(lo_, lo_, p[i], MPFR_RNDD);
    mpfr_max(hi_, hi_, q[i], MPFR_RNDU);
  }
  for (int i = 0; i < 4; ++i) {
    mpfr_clear(p[i]);
    mpfr_clear(q[i]);
  }
  return *this;
}

RealEnclosure& RealEnclosure::operator/=(const RealEnclosure& rhs) {
  if (rhs.ContainsZero()) {
    throw Error(ErrorCode::kInvalidArgument,
                "division by an enclosure that contains zero");
  }
  Widen(*this, rhs.precision_);
  mpfr_t p[4];
  mpfr_t q[4];
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  for (int i = 0; i < 4; ++i) {
    mpfr_init2(p[i], precision_);
    mpfr_init2(q[i], precision_);
    mpfr_div(p[i], a[i / 2], b[i % 2], MPFR_RNDD);
    mpfr_div(q[i], a[i / 2], b[i % 2], MPFR_RNDU);
  }
  mpfr_set(lo_, p[0], MPFR_RNDD);
  mpfr_set(hi_, q[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i) {
    mpfr_min(lo_, lo_, p[i], MPFR_RNDD);
    mpfr_max(hi_, hi_, q[i], MPFR_RNDU);
  }
  for (int i = 0; i < 4; ++i) {
    mpfr_clear(p[i]);
    mpfr_clear(q[i]);
  }
  return *this;
}

RealEnclosure operator+(const RealEnclosure& lhs, long rhs) {
  return lhs + RealEnclosure::FromInteger(rhs, lhs.precision());
}

RealEnclosure operator-(const RealEnclosure& lhs, long rhs) {
  return lhs - RealEnclosure::FromInteger(rhs, lhs.precision());
}

RealEnclosure operator*(const RealEnclosure& lhs, long rhs) {
  return lhs * RealEnclosure::FromInteger(rhs, lhs.precision());
}

RealEnclosure operator/(const RealEnclosure& lhs, long rhs) {
  return lhs / RealEnclosure::FromInteger(rhs, lhs.precision());
}

RealEnclosure Abs(const RealEnclosure& x) {
  if (mpfr_sgn(x.lower()) >= 0) return x;
  if (mpfr_sgn(x.upper()) <= 0) return -x;
  RealEnclosure out(x.precision());
  mpfr_set_zero(out.mutable_lower(), 1);
  mpfr_neg(out.mutable_upper(), x.lower(), MPFR_RNDU);
  mpfr_max(out.mutable_upper(), out.upper(), x.upper(), MPFR_RNDU);
  return out;
}

RealEnclosure Sqrt(const RealEnclosure& x) {
  if (mpfr_sgn(x.upper()) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "square root of a negative value");
  }
  RealEnclosure out(x.precision());
  if (mpfr_sgn(x.lower()) <= 0) {
    mpfr_set_zero(out.mutable_lower(), 1);
  } else {
    mpfr_sqrt(out.mutable_lower(), x.lower(), MPFR_RNDD);
  }
  mpfr_sqrt(out.mutable_upper(), x.upper(), MPFR_RNDU);
  return out;
}

RealEnclosure Log(const RealEnclosure& x) {
  if (mpfr_sgn(x.lower()) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "logarithm of an enclosure that is not certainly positive");
  }
  RealEnclosure out(x.precision());
  mpfr_log(out.mutable_lower(), x.lower(), MPFR_RNDD);
  mpfr_log(out.mutable_upper(), x.upper(), MPFR_RNDU);
  return out;
}

RealEnclosure Exp(const RealEnclosure& x) {
  RealEnclosure out(x.precision());
  mpfr_exp(out.mutable_lower(), x.lower(), MPFR_RNDD);
  mpfr_exp(out.mutable_upper(), x.upper(), MPFR_RNDU);
  return out;
}

RealEnclosure Pow(const RealEnclosure& x, unsigned exponent) {
  if (exponent == 0) return RealEnclosure::FromInteger(1, x.precision());
  if (exponent % 2 == 1 || mpfr_sgn(x.lower()) >= 0) {
    RealEnclosure out(x.precision());
    mpfr_pow_ui(out.mutable_lower(), x.lower(), exponent, MPFR_RNDD);
    mpfr_pow_ui(out.mutable_upper(), x.upper(), exponent, MPFR_RNDU);
    return out;
  }
  return Pow(Abs(x), exponent);
}

RealEnclosure Max(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure out(std::max(a.precision(), b.precision()));
  mpfr_max(out.mutable_lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_max(out.mutable_upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

RealEnclosure Min(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure out(std::max(a.precision(), b.precision()));
  mpfr_min(out.mutable_lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_min(out.mutable_upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

}  // namespace vlab
