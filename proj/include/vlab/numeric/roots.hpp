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

#ifndef VLAB_NUMERIC_ROOTS_HPP_
#define VLAB_NUMERIC_ROOTS_HPP_

#include <gmpxx.h>

#include <vector>

#include "vlab/numeric/enclosure.hpp"
#include "vlab/numeric/rational_polynomial.hpp"

namespace vlab {

// Rational interval containing exactly one real root. When lo == hi the root
// is the rational lo itself; otherwise the polynomial is nonzero at both
// endpoints and changes sign across the interval.
struct IsolatingInterval {
  mpq_class lo;
  mpq_class hi;

  bool IsExact() const { return lo == hi; }
  friend bool operator==(const IsolatingInterval&,
                         const IsolatingInterval&) = default;
};

// Sturm chain of the squarefree part of a nonzero polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& p);

  const RationalPolynomial& squarefree() const { return chain_.front(); }
  // Number of distinct real roots in the open interval (lo, hi).
  int CountOpen(const mpq_class& lo, const mpq_class& hi) const;

 private:
  int VariationsRight(const mpq_class& x) const;
  int VariationsLeft(const mpq_class& x) const;

  std::vector<RationalPolynomial> chain_;
};

// Distinct real roots of p in the open interval (lo, hi), sorted, as
// pairwise-disjoint isolating intervals contained in (lo, hi).
// Throws kZeroPolynomial, kInvalidArgument when lo >= hi.
std::vector<IsolatingInterval> IsolateRoots(const RationalPolynomial& p,
                                            const mpq_class& lo,
                                            const mpq_class& hi);

// Number of distinct real roots in (lo, hi).
int CountRoots(const RationalPolynomial& p, const mpq_class& lo,
               const mpq_class& hi);

// All distinct real roots.
std::vector<IsolatingInterval> IsolateAllRoots(const RationalPolynomial& p);

// Enclosure of the single root in the interval with radius <= tol. A root
// sitting on an endpoint is accepted when it is the only root in the closed
// interval. Throws kNotIsolating when the interval does not isolate a root,
// kInvalidArgument when tol <= 0.
RealEnclosure RefineRoot(const RationalPolynomial& p,
                         const IsolatingInterval& isolating,
                         const mpq_class& tol);

// Bisects the isolating interval until hi - lo <= width.
IsolatingInterval NarrowRoot(const RationalPolynomial& p,
                             const IsolatingInterval& isolating,
                             const mpq_class& width);

// 1 + max |a_i / a_d|: every real root lies in (-bound, bound).
mpq_class CauchyRootBound(const RationalPolynomial& p);

}  // namespace vlab

#endif  // VLAB_NUMERIC_ROOTS_HPP_
