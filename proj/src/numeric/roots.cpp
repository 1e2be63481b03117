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

#include "vlab/numeric/roots.hpp"

#include <algorithm>
#include <cmath>

#include "vlab/error.hpp"

namespace vlab {
namespace {

// Sign of p immediately to the right (direction = +1) or left (-1) of x.
int SignNear(const RationalPolynomial& p, const mpq_class& x, int direction) {
  if (p.IsZero()) return 0;
  RationalPolynomial d = p;
  int order = 0;
  while (!d.IsZero()) {
    const int s = d.SignAt(x);
    if (s != 0) return (direction < 0 && order % 2 == 1) ? -s : s;
    d = d.Derivative();
    ++order;
  }
  return 0;
}

int Variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void IsolateInto(const SturmChain& sturm, const mpq_class& a,
                 const mpq_class& b, int count,
                 std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  const RationalPolynomial& s = sturm.squarefree();
  if (count == 1 && s.SignAt(a) != 0 && s.SignAt(b) != 0) {
    out.push_back({a, b});
    return;
  }
  mpq_class mid = (a + b) / 2;
  mid.canonicalize();
  IsolateInto(sturm, a, mid, sturm.CountOpen(a, mid), out);
  if (s.SignAt(mid) == 0) out.push_back({mid, mid});
  IsolateInto(sturm, mid, b, sturm.CountOpen(mid, b), out);
}

}  // namespace

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "Sturm chain of the zero polynomial");
  }
  chain_.push_back(SquarefreePart(p));
  if (chain_.front().degree() <= 0) return;
  chain_.push_back(chain_.front().Derivative());
  while (chain_.back().degree() > 0) {
    RationalPolynomial r = chain_[chain_.size() - 2].DivMod(chain_.back()).second;
    if (r.IsZero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::VariationsRight(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) signs.push_back(SignNear(s, x, +1));
  return Variations(signs);
}

int SturmChain::VariationsLeft(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) signs.push_back(SignNear(s, x, -1));
  return Variations(signs);
}

int SturmChain::CountOpen(const mpq_class& lo, const mpq_class& hi) const {
  if (lo >= hi) return 0;
  return VariationsRight(lo) - VariationsLeft(hi);
}

std::vector<IsolatingInterval> IsolateRoots(const RationalPolynomial& p,
                                            const mpq_class& lo,
                                            const mpq_class& hi) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "cannot isolate roots of zero");
  }
  if (lo >= hi) {
    throw Error(ErrorCode::kInvalidArgument, "isolation interval is empty");
  }
  const SturmChain sturm(p);
  std::vector<IsolatingInterval> out;
  IsolateInto(sturm, lo, hi, sturm.CountOpen(lo, hi), out);
  return out;
}

int CountRoots(const RationalPolynomial& p, const mpq_class& lo,
               const mpq_class& hi) {
  return SturmChain(p).CountOpen(lo, hi);
}

mpq_class CauchyRootBound(const RationalPolynomial& p) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "root bound of zero");
  }
  mpq_class best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class ratio = abs(p.coefficient(i) / p.leading());
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

std::vector<IsolatingInterval> IsolateAllRoots(const RationalPolynomial& p) {
  const mpq_class bound = CauchyRootBound(p);
  return IsolateRoots(p, -bound, bound);
}

IsolatingInterval NarrowRoot(const RationalPolynomial& p,
                             const IsolatingInterval& isolating,
                             const mpq_class& width) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "cannot refine a root of zero");
  }
  if (width <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "refinement width must be positive");
  }
  const RationalPolynomial s = SquarefreePart(p);
  mpq_class a = isolating.lo;
  mpq_class b = isolating.hi;
  if (a > b) throw Error(ErrorCode::kNotIsolating, "interval endpoints reversed");
  if (a == b) {
    if (s.SignAt(a) != 0) {
      throw Error(ErrorCode::kNotIsolating, "point interval is not a root");
    }
    return {a, b};
  }
  const int sa = s.SignAt(a);
  const int sb = s.SignAt(b);
  const SturmChain sturm(s);
  const int inside = sturm.CountOpen(a, b);
  if (sa == 0 || sb == 0) {
    if (inside != 0 || (sa == 0 && sb == 0)) {
      throw Error(ErrorCode::kNotIsolating, "interval holds more than one root");
    }
    return sa == 0 ? IsolatingInterval{a, a} : IsolatingInterval{b, b};
  }
  if (inside != 1 || sa == sb) {
    throw Error(ErrorCode::kNotIsolating,
                "interval holds " + std::to_string(inside) + " roots");
  }
  while (b - a > width) {
    mpq_class mid = (a + b) / 2;
    mid.canonicalize();
    const int sm = s.SignAt(mid);
    if (sm == 0) return {mid, mid};
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return {a, b};
}

RealEnclosure RefineRoot(const RationalPolynomial& p,
                         const IsolatingInterval& isolating,
                         const mpq_class& tol) {
  if (tol <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  // Width tol leaves room for outward rounding of the endpoints.
  const IsolatingInterval narrow = NarrowRoot(p, isolating, tol);
  const double scale = std::max({1.0, std::fabs(narrow.lo.get_d()),
                                 std::fabs(narrow.hi.get_d())});
  const double tol_bits = -std::log2(std::max(tol.get_d(), 1e-300));
  const long precision = std::max<long>(
      kDefaultPrecisionBits,
      static_cast<long>(std::ceil(tol_bits + std::log2(scale))) + 16);
  return RealEnclosure::FromEndpoints(narrow.lo, narrow.hi, precision);
}

}  // namespace vlab
