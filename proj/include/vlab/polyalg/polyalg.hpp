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

#ifndef VLAB_POLYALG_POLYALG_HPP_
#define VLAB_POLYALG_POLYALG_HPP_

#include <gmpxx.h>

#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/int_polynomial.hpp"

namespace vlab {

// Rank over Q of an integer matrix (rows may have different lengths; missing
// entries are zero), by fraction-free elimination.
int MatrixRank(std::vector<std::vector<mpz_class>> rows);

// Rank of the coefficient vectors inside the degree <= ambient_degree space.
// Throws kDegreeOverflow when a polynomial does not fit.
int RankOfPolys(const std::vector<IntPolynomial>& polys, int ambient_degree);

// {P_{k-1}, P_k, P_{k+1}} linearly independent (k is 1-based). Throws
// kIndexOutOfRange when the window leaves the record list.
bool IsGood(const SequenceData& seq, int k);

struct EllResult {
  int ell = 0;
  // The records ran out while P_{k-1}, ..., P_{ell-1} still had rank 2.
  bool truncated = false;
};

// Largest ell >= k+1 such that P_{k-1}, ..., P_{ell-1} span a 2-dimensional
// space. Throws kIndexOutOfRange, kDependentBase when P_{k-1}, P_k are
// proportional.
EllResult EllOfK(const SequenceData& seq, int k);

// {P, T P, ..., T^(n-2) P} inside the degree <= 2n-2 space.
struct VSet {
  IntPolynomial base;
  int n = 0;
  std::vector<IntPolynomial> elements;
};

// Throws kDegreeOverflow when deg P > n.
VSet MakeVSet(const IntPolynomial& p, int n);

// Dimension of the span of the union of the sets (all must share n).
int SpanDimUnion(const std::vector<VSet>& sets);

// deg P == n exactly and P irreducible over Q (content ignored). Modular
// distinct-degree factorisation narrows the possible factor degrees; the
// remaining ones are searched by recombining numerically computed roots and
// confirmed by exact division.
bool IsIrreducibleDegN(const IntPolynomial& p, int n);

// Fills good and ell (with its truncation flag) on every record whose
// window exists.
void AnnotateGoodness(SequenceData& seq);

}  // namespace vlab

#endif  // VLAB_POLYALG_POLYALG_HPP_
