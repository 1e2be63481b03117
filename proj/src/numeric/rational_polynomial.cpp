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

#include "vlab/numeric/rational_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "vlab/error.hpp"

namespace vlab {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  Trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  Trim();
}

RationalPolynomial RationalPolynomial::Monomial(const mpq_class& coefficient,
                                                int degree) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = coefficient;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

mpq_class RationalPolynomial::Evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int RationalPolynomial::SignAt(const mpq_class& x) const {
  return sgn(Evaluate(x));
}

RealEnclosure RationalPolynomial::Evaluate(const RealEnclosure& x) const {
  RealEnclosure acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += RealEnclosure::FromRational(*it, x.precision());
  }
  return acc;
}

RationalPolynomial RationalPolynomial::Derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::Monic() const {
  if (IsZero()) return {};
  RationalPolynomial out = *this;
  const mpq_class lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  Trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  Trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (IsZero() || rhs.IsZero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  Trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  Trim();
  return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::DivMod(
    const RationalPolynomial& divisor) const {
  if (divisor.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "polynomial division by zero");
  }
  RationalPolynomial remainder = *this;
  const int dd = divisor.degree();
  if (remainder.degree() < dd) return {RationalPolynomial(), remainder};
  std::vector<mpq_class> quotient(
      static_cast<std::size_t>(remainder.degree() - dd) + 1);
  while (!remainder.IsZero() && remainder.degree() >= dd) {
    const int shift = remainder.degree() - dd;
    const mpq_class factor = remainder.leading() / divisor.leading();
    quotient[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i) {
      remainder.coeffs_[static_cast<std::size_t>(i + shift)] -=
          factor * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    remainder.Trim();
  }
  return {RationalPolynomial(std::move(quotient)), remainder};
}

std::string RationalPolynomial::ToString(const std::string& variable) const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || i == 0) out << magnitude.get_str();
    if (i >= 1) out << variable;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

RationalPolynomial Gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.IsZero()) {
    auto remainder = a.DivMod(b).second;
    a = std::move(b);
    b = std::move(remainder);
  }
  return a.Monic();
}

RationalPolynomial SquarefreePart(const RationalPolynomial& p) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "squarefree part of zero");
  }
  if (p.degree() == 0) return RationalPolynomial({1});
  const RationalPolynomial g = Gcd(p, p.Derivative());
  return p.DivMod(g).first.Monic();
}

}  // namespace vlab
